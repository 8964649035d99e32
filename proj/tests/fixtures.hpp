#pragma once

#include "sphsys/textio.hpp"

namespace fixtures {

inline sphsys::SphericalSystem fix_b4() {
  return sphsys::parse_system("system\n roots B4\n sp a4\n sigma a1+a2, a3+a4\nend\n");
}

inline sphsys::SphericalSystem fix_q1() {
  return sphsys::parse_system("system\n roots B4\n sp a1,a4\n sigma a3+a4\nend\n");
}

// (A1; -; {a1}; {d+, d-})
inline sphsys::SphericalSystem a1_rank1() {
  return sphsys::parse_system("system\n roots A1\n sp -\n sigma a1\n apair d+ a1 1\n apair d- a1 1\nend\n");
}

inline sphsys::SphericalSystem rank0(const char* roots, const char* sp) {
  return sphsys::parse_system(std::string("system\n roots ") + roots + "\n sp " + sp + "\n sigma -\nend\n");
}

}  // namespace fixtures
