#include "sphsys/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphsys/catalog.hpp"
#include "sphsys/enumerate.hpp"
#include "sphsys/quotient.hpp"
#include "sphsys/structure.hpp"
#include "sphsys/textio.hpp"

namespace sphsys::cli {

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<std::string> color_list(const ColorTable& t, ColorSet s) {
  std::vector<std::string> out;
  for (int i : s.members()) out.push_back(t.colors[static_cast<std::size_t>(i)].name);
  return out;
}

std::string describe(const SphericalSystem& sys) {
  std::string sigma;
  for (const LatticeVector& g : sys.sigma()) sigma += (sigma.empty() ? "" : ", ") + format_vector(g);
  return "roots " + sys.root_system().name() + "; sp " + format_root_set(sys.sp()) + "; sigma " +
         (sigma.empty() ? "-" : sigma);
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

json color_table_json(const ColorTable& t) {
  json colors = json::array(), matrix = json::array();
  for (const Color& c : t.colors) {
    colors.push_back({{"name", c.name}, {"kind", to_string(c.kind)}, {"moved_by", format_root_set(c.moved_by)}});
    matrix.push_back(c.row);
  }
  return {{"colors", colors}, {"matrix", matrix}};
}

void print_color_table(std::ostream& out, const SphericalSystem& sys, const ColorTable& t) {
  out << "colors (rows over sigma:";
  for (const LatticeVector& g : sys.sigma()) out << " " << format_vector(g);
  out << ")\n";
  for (const Color& c : t.colors)
    out << "  " << c.name << "  " << to_string(c.kind) << "  moved by " << format_root_set(c.moved_by) << "  row ("
        << join_ints(c.row) << ")\n";
}

std::string marker_text(const Marker& m, const std::vector<std::string>& names) {
  auto set_text = [&](ColorSet s) {
    std::string r;
    for (int i : s.members()) r += (r.empty() ? "" : ",") + names[static_cast<std::size_t>(i)];
    return "{" + r + "}";
  };
  if (m.kind == Marker::Kind::tail)
    return "has-tail(" + format_vector(m.gamma) + ", " + m.shape.to_string() + ", " + set_text(m.colors) + ")";
  return "has-higher-defect(" + set_text(m.colors) + ", " + std::to_string(m.jump) + ")";
}

std::string node_text(const ReductionNode& n) {
  auto set_text = [&](ColorSet s) {
    std::string r;
    for (int i : s.members()) r += (r.empty() ? "" : ",") + n.color_names[static_cast<std::size_t>(i)];
    return "{" + r + "}";
  };
  std::string s = to_string(n.kind);
  switch (n.kind) {
    case ReductionNode::Kind::parabolic_induction: s += " S'={" + format_root_set(n.s_prime) + "}"; break;
    case ReductionNode::Kind::fiber_product:
      s += " " + set_text(n.d1) + " " + set_text(n.d2) + " " + set_text(n.d1 | n.d2);
      break;
    case ReductionNode::Kind::projective_fibration:
      s += " " + n.color_names[static_cast<std::size_t>(n.delta)];
      break;
    default: break;
  }
  for (const Marker& m : n.markers) s += " " + marker_text(m, n.color_names);
  return s + "  [" + describe(n.system) + "]";
}

void print_tree(std::ostream& out, const ReductionNode& n, int depth) {
  out << std::string(static_cast<std::size_t>(2 * depth), ' ') << node_text(n) << "\n";
  for (const ReductionNode& c : n.children) print_tree(out, c, depth + 1);
}

json tree_json(const ReductionNode& n) {
  json j = {{"kind", to_string(n.kind)}, {"system", print_system(n.system)}};
  auto names = [&](ColorSet s) {
    std::vector<std::string> r;
    for (int i : s.members()) r.push_back(n.color_names[static_cast<std::size_t>(i)]);
    return r;
  };
  j["s_prime"] = n.kind == ReductionNode::Kind::parabolic_induction ? json(format_root_set(n.s_prime)) : json();
  j["colors"] = n.kind == ReductionNode::Kind::fiber_product
                    ? json::array({names(n.d1), names(n.d2), names(n.d1 | n.d2)})
                : n.kind == ReductionNode::Kind::projective_fibration
                    ? json::array({n.color_names[static_cast<std::size_t>(n.delta)]})
                    : json::array();
  j["markers"] = json::array();
  for (const Marker& m : n.markers) j["markers"].push_back(marker_text(m, n.color_names));
  j["children"] = json::array();
  for (const ReductionNode& c : n.children) j["children"].push_back(tree_json(c));
  return j;
}

json report_json(const ColorTable& t, const QuotientReport& r) {
  json witness = json::array();
  for (long w : r.witness) witness.push_back(w);
  return {{"subset", color_list(t, r.delta_prime)},
          {"flags",
           {{"distinguished", r.distinguished},
            {"star", r.star},
            {"smooth", r.star && r.smooth},
            {"homogeneous", r.star && r.homogeneous}}},
          {"witness", witness},
          {"quotient", r.quotient ? json(print_system(*r.quotient)) : json()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical systems toolkit", "sphsys"};
  app.require_subcommand(1, 1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, colors_opt, q_opt, roots_opt, sigma_opt, target;
  bool star = false, minimal = false, homogeneous = false, tree = false;
  bool f_primitive = false, f_cuspidal = false, f_reductive = false, count = false, probe = false, mod_aut = false;
  int defect_opt = -1, max_rank = -1;
  long limit = 0;

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", file, "System file, or - for standard input")->required();
    return c;
  };
  CLI::App* c_validate = file_cmd("validate", "Check the axioms");
  CLI::App* c_info = file_cmd("info", "Rank, defect, verdicts and colors");
  CLI::App* c_colors = file_cmd("colors", "Color table with the Cartan pairing");
  CLI::App* c_quotients = file_cmd("quotients", "Distinguished subsets and their quotients");
  c_quotients->add_flag("--star", star, "Only (*)-distinguished subsets");
  c_quotients->add_flag("--minimal", minimal, "Only inclusion-minimal subsets of the selected kind");
  c_quotients->add_flag("--homogeneous", homogeneous, "Only homogeneous subsets");
  CLI::App* c_quotient = file_cmd("quotient", "Quotient by a subset of colors");
  c_quotient->add_option("--colors", colors_opt, "Comma-separated color names")->required();
  CLI::App* c_localize = file_cmd("localize", "Localization in simple or spherical roots");
  auto* o_roots = c_localize->add_option("--roots", roots_opt, "Simple roots to keep, e.g. a1,a3");
  auto* o_sigma = c_localize->add_option("--sigma", sigma_opt, "Spherical roots to keep, e.g. a1+a2");
  o_roots->excludes(o_sigma);
  CLI::App* c_tails = file_cmd("tails", "Tails of the system");
  CLI::App* c_primitive = file_cmd("primitive", "Primitivity verdict");
  CLI::App* c_reduce = file_cmd("reduce", "Reduction step, or the full tree");
  c_reduce->add_flag("--tree", tree, "Reduce recursively");
  CLI::App* c_center = file_cmd("center", "Center data for a minimal homogeneous subset");
  c_center->add_option("--q", q_opt, "Comma-separated color names")->required();
  CLI::App* c_monoid = file_cmd("monoid", "Weight monoid generators");
  c_monoid->add_option("--q", q_opt, "Comma-separated color names")->required();

  CLI::App* c_enumerate = app.add_subcommand("enumerate", "All spherical systems of a root system");
  c_enumerate->add_option("roots", target, "Root system, e.g. B3 or \"A1 A2\"")->required();
  c_enumerate->add_flag("--primitive", f_primitive);
  c_enumerate->add_flag("--cuspidal", f_cuspidal);
  c_enumerate->add_flag("--reductive", f_reductive);
  c_enumerate->add_option("--defect", defect_opt)->check(CLI::NonNegativeNumber);
  c_enumerate->add_option("--max-rank", max_rank)->check(CLI::NonNegativeNumber);
  c_enumerate->add_option("--limit", limit)->check(CLI::NonNegativeNumber);
  c_enumerate->add_flag("--count", count, "Print only the number of systems");
  c_enumerate->add_flag("--probe-star", probe, "Report distinguished subsets that are not (*)-distinguished");
  c_enumerate->add_flag("--mod-aut", mod_aut, "One system per diagram-involution orbit");
  CLI::App* c_catalog = app.add_subcommand("catalog", "Catalog roots embedded in a root system");
  c_catalog->add_option("roots", target, "Root system")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "sphsys: " << e.what() << "\n";
    return input_error;
  }
  const bool as_json = format == "json";

  try {
    if (c_enumerate->parsed()) {
      EnumerationQuery q;
      q.rs = RootSystem::parse(target);
      q.max_rank = max_rank;
      q.primitive = f_primitive;
      q.cuspidal = f_cuspidal;
      q.reductive = f_reductive;
      if (defect_opt >= 0) q.defect = defect_opt;
      q.limit = limit;
      q.mod_aut = mod_aut;
      if (probe) {
        std::vector<ProbeHit> hits = probe_distinguished_not_star(q);
        json j = json::array();
        for (const ProbeHit& h : hits) {
          ColorTable t = build_colors(h.system);
          if (as_json) {
            j.push_back({{"system", print_system(h.system)}, {"colors", color_list(t, h.colors)}});
          } else {
            out << "# distinguished, not (*): " << t.format_set(h.colors) << "\n" << print_system(h.system);
          }
        }
        if (as_json) out << json{{"hits", j}}.dump(2) << "\n";
        else if (hits.empty()) out << "no distinguished subset fails (*)\n";
        return hits.empty() ? ok : negative;
      }
      json systems = json::array();
      EnumerationSummary s = enumerate(q, [&](const SphericalSystem& sys) {
        if (count) return true;
        if (as_json) {
          systems.push_back({{"system", print_system(sys)}, {"flags", {{"shared_color", has_shared_color(sys)}}}});
        } else {
          if (has_shared_color(sys)) out << "# shared A-color\n";
          out << print_system(sys);
        }
        return true;
      });
      if (as_json) {
        out << json{{"count", s.count}, {"truncated", s.truncated}, {"systems", systems}}.dump(2) << "\n";
      } else if (count) {
        out << s.count << "\n";
      }
      if (s.truncated) err << "sphsys: enumeration truncated\n";
      return ok;
    }
    if (c_catalog->parsed()) {
      out << dump_catalog(RootSystem::parse(target));
      return ok;
    }

    std::string text = read_input(file, in);
    if (c_validate->parsed()) {
      std::vector<SphericalSystem> all = parse_systems(text);
      if (all.empty()) throw InputError("no system block");
      bool good = true;
      json j = json::array();
      for (std::size_t k = 0; k < all.size(); ++k) {
        std::vector<Violation> v = validate(all[k]);
        good = good && v.empty();
        json vs = json::array();
        for (const Violation& x : v) vs.push_back({{"axiom", x.axiom}, {"detail", x.detail}});
        j.push_back({{"flags", {{"valid", v.empty()}}}, {"violations", vs}});
        if (!as_json) {
          if (all.size() > 1) out << "system " << k + 1 << ": ";
          out << (v.empty() ? "ok" : "invalid") << "\n";
          for (const Violation& x : v) out << "  " << x.axiom << ": " << x.detail << "\n";
        }
      }
      if (as_json) out << json{{"systems", j}}.dump(2) << "\n";
      return good ? ok : negative;
    }

    SphericalSystem sys = parse_system(text);
    ColorTable table = build_colors(sys);

    if (c_info->parsed()) {
      std::vector<Violation> v = validate(sys);
      if (!v.empty()) {
        err << "sphsys: system is not valid (" << v.front().axiom << ": " << v.front().detail << ")\n";
        return negative;
      }
      Reductivity red = is_reductive(sys);
      PrimitivityReport prim = is_primitive(sys);
      if (as_json) {
        json j = color_table_json(table);
        j["rank"] = sys.rank();
        j["defect"] = defect(sys);
        j["flags"] = {{"cuspidal", is_cuspidal(sys)}, {"reductive", red.reductive}, {"primitive", prim.primitive()}};
        j["witness"] = red.witness;
        out << j.dump(2) << "\n";
      } else {
        out << "rank " << sys.rank() << "\n";
        out << "defect " << defect(sys) << "\n";
        out << "cuspidal " << (is_cuspidal(sys) ? "yes" : "no") << "\n";
        out << "reductive " << (red.reductive ? "yes" : "no") << "\n";
        out << "primitive " << (prim.primitive() ? "yes" : "no") << "\n";
        print_color_table(out, sys, table);
      }
      return ok;
    }
    if (c_colors->parsed()) {
      if (as_json) out << color_table_json(table).dump(2) << "\n";
      else print_color_table(out, sys, table);
      return ok;
    }
    if (c_quotients->parsed()) {
      std::vector<ColorSet> subsets;
      if (minimal) {
        subsets = minimal_subsets(sys, table, homogeneous ? SubsetKind::homogeneous : SubsetKind::star);
      } else {
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << table.size()); ++b) subsets.emplace_back(b);
        std::stable_sort(subsets.begin(), subsets.end(), [](ColorSet x, ColorSet y) {
          return x.size() != y.size() ? x.size() < y.size() : x.members() < y.members();
        });
      }
      json reports = json::array();
      for (ColorSet s : subsets) {
        QuotientReport r = analyze(sys, table, s);
        if (!r.distinguished) continue;
        if ((star || homogeneous) && !r.star) continue;
        if (homogeneous && !r.homogeneous) continue;
        if (as_json) {
          reports.push_back(report_json(table, r));
          continue;
        }
        out << table.format_set(s) << "  witness";
        for (std::size_t k = 0; k < r.witness.size(); ++k)
          out << " " << r.witness[k] << "*" << table.colors[static_cast<std::size_t>(s.members()[k])].name;
        out << "  " << (r.star ? "star" : "not-star");
        if (r.star) out << (r.smooth ? " smooth" : "") << (r.homogeneous ? " homogeneous" : "");
        out << "\n";
        if (r.quotient) out << "  quotient: " << describe(*r.quotient) << "\n";
      }
      if (as_json) {
        json j = color_table_json(table);
        j["reports"] = reports;
        out << j.dump(2) << "\n";
      }
      return ok;
    }
    if (c_quotient->parsed()) {
      ColorSet s = table.parse_set(colors_opt);
      try {
        SphericalSystem q = quotient(sys, table, s);
        if (as_json) out << report_json(table, analyze(sys, table, s)).dump(2) << "\n";
        else out << print_system(q);
        return ok;
      } catch (const NotStarDistinguished& e) {
        err << "sphsys: " << e.what() << "; kernel basis:";
        for (const auto& v : e.kernel()) err << " (" << join_ints(v) << ")";
        err << "\n";
        return negative;
      }
    }
    if (c_localize->parsed()) {
      SphericalSystem loc;
      if (!sigma_opt.empty()) {
        std::vector<bool> keep(static_cast<std::size_t>(sys.rank()), false);
        std::string item;
        std::istringstream items(sigma_opt);
        while (std::getline(items, item, ',')) {
          if (item == "-" || item.empty()) continue;
          int k = sys.sigma_index(parse_combination(item, sys.root_system().rank()));
          if (k < 0) throw InputError(item + " is not a spherical root of the system");
          keep[static_cast<std::size_t>(k)] = true;
        }
        loc = localize_sigma(sys, keep);
      } else {
        RootSet keep;
        std::string item;
        std::istringstream items(roots_opt);
        while (std::getline(items, item, ',')) {
          if (item == "-" || item.empty()) continue;
          int a = parse_combination(item, sys.root_system().rank()).as_simple_root();
          if (a < 0) throw InputError(item + " is not a simple root");
          keep.insert(a);
        }
        loc = localize_simple(sys, keep);
      }
      if (as_json) out << json{{"system", print_system(loc)}}.dump(2) << "\n";
      else out << print_system(loc);
      return ok;
    }
    if (c_tails->parsed()) {
      std::vector<Tail> tails = detect_tails(sys, table);
      json j = json::array();
      for (const Tail& t : tails) {
        if (as_json)
          j.push_back({{"gamma", format_vector(t.gamma)}, {"shape", t.shape.to_string()}, {"colors", color_list(table, t.colors)}});
        else
          out << format_vector(t.gamma) << "  " << t.shape.to_string() << "  " << table.format_set(t.colors) << "\n";
      }
      if (as_json) out << json{{"tails", j}}.dump(2) << "\n";
      return ok;
    }
    if (c_primitive->parsed()) {
      PrimitivityReport p = is_primitive(sys);
      std::vector<std::string> names;
      for (const Color& c : table.colors) names.push_back(c.name);
      if (as_json) {
        json markers = json::array();
        for (const Marker& m : p.markers) markers.push_back(marker_text(m, names));
        out << json{{"flags",
                     {{"primitive", p.primitive()},
                      {"cuspidal", p.cuspidal},
                      {"no_projective", p.no_projective},
                      {"indecomposable", p.indecomposable}}},
                    {"markers", markers}}
                   .dump(2)
            << "\n";
      } else {
        out << (p.primitive() ? "primitive" : "not primitive");
        if (!p.cuspidal) out << " (not cuspidal)";
        else if (!p.no_projective) out << " (projective color)";
        else if (!p.indecomposable) out << " (decomposable)";
        for (const Marker& m : p.markers) out << " " << marker_text(m, names);
        out << "\n";
      }
      return p.primitive() ? ok : negative;
    }
    if (c_reduce->parsed()) {
      ReductionNode n = tree ? reduction_tree(sys) : reduction_step(sys);
      if (as_json) out << tree_json(n).dump(2) << "\n";
      else print_tree(out, n, 0);
      return ok;
    }
    if (c_center->parsed()) {
      CenterData cd = center_data(sys, table.parse_set(q_opt));
      if (as_json) {
        out << json{{"colors", color_list(table, cd.q_colors)},
                    {"matrix", cd.n_basis},
                    {"lambda_weights", cd.lambda_weights},
                    {"dim_c", cd.dim_c}}
                   .dump(2)
            << "\n";
      } else {
        out << "N basis:";
        if (cd.n_basis.empty()) out << " 0";
        for (const auto& v : cd.n_basis) out << " " << format_vector(combine(sys, v));
        out << "\n";
        for (const auto& w : cd.lambda_weights) out << "  weight (" << join_ints(w) << ")\n";
        out << "dim C " << cd.dim_c << "\n";
      }
      return ok;
    }
    if (c_monoid->parsed()) {
      std::vector<LatticeVector> gens = weight_monoid(sys, table.parse_set(q_opt));
      if (as_json) {
        json j = json::array();
        for (const LatticeVector& g : gens) j.push_back(format_vector(g));
        out << json{{"generators", j}}.dump(2) << "\n";
      } else {
        for (const LatticeVector& g : gens) out << format_vector(g) << "\n";
      }
      return ok;
    }
  } catch (const ParseError& e) {
    err << "sphsys: " << e.what() << "\n";
    return input_error;
  } catch (const InputError& e) {
    err << "sphsys: " << e.what() << "\n";
    return input_error;
  } catch (const std::invalid_argument& e) {
    err << "sphsys: " << e.what() << "\n";
    return input_error;
  } catch (const std::domain_error& e) {
    err << "sphsys: " << e.what() << "\n";
    return negative;
  }
  return ok;
}

}  // namespace sphsys::cli
