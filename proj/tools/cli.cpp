#include "surgeon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "acceptance/criteria.hpp"
#include "surgeon/cache.hpp"
#include "surgeon/error.hpp"
#include "surgeon/family.hpp"
#include "surgeon/invariants.hpp"
#include "surgeon/json_io.hpp"

namespace surgeon::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  long lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  Range r;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stol(text, &used);
      if (used != text.size()) throw UsageError("");
    } else {
      r.lo = std::stol(text.substr(0, dots), &used);
      if (used != dots) throw UsageError("");
      const std::string rest = text.substr(dots + 2);
      r.hi = std::stol(rest, &used);
      if (used != rest.size()) throw UsageError("");
    }
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected a..b");
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  return r;
}

// Malformed flag values are usage errors, not domain errors.
Slope flag_slope(const std::string& token) {
  try {
    return parse_slope(token);
  } catch (const surgeon::ParseError& e) {
    throw UsageError(e.what());
  }
}

std::vector<Slope> parse_slopes(const std::string& text) {
  std::vector<Slope> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(flag_slope(token));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write " + path.string());
}

bool is_json_path(const std::string& path) { return fs::path(path).extension() == ".json"; }

// Shared flags.
struct Globals {
  bool json = false;
  std::string cache_dir;
  bool no_cache = false;
};

struct LinkInput {
  std::string link;
  bool assume_unknotted = false;

  // A .json file is a family asset; anything else is PD text. Without a
  // file the built-in family link is used.
  SurgeryPresentation load(std::vector<Slope> slopes = {}) const {
    SurgeryPresentation p;
    if (link.empty()) {
      p = default_asset().base;
    } else if (is_json_path(link)) {
      p = asset_from_json(Json::parse(read_file(link))).base;
    } else {
      const LinkDiagram d = parse_pd(read_file(link), fs::path(link).stem().string());
      p = SurgeryPresentation::from_diagram(d, std::vector<Slope>(d.component_count()), {});
      if (assume_unknotted)
        p = SurgeryPresentation::from_linking(p.linking(), p.slopes(), std::vector<bool>(p.component_count(), true),
                                              p.names(), d.name());
    }
    if (slopes.empty()) return p;
    if (slopes.size() != p.component_count())
      throw UsageError("expected " + std::to_string(p.component_count()) + " slopes, got " +
                       std::to_string(slopes.size()));
    return p.with_slopes(std::move(slopes));
  }
};

FamilyAsset load_asset(const std::string& path) {
  if (path.empty()) return default_asset();
  return asset_from_json(Json::parse(read_file(path)));
}

std::string slopes_text(const std::vector<Slope>& slopes) {
  std::string s;
  for (const Slope& x : slopes) s += (s.empty() ? "" : ",") + x.to_string();
  return s;
}

std::string linking_text(const SurgeryPresentation& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.component_count(); ++i) {
    out << p.names()[i];
    for (std::size_t j = 0; j < p.component_count(); ++j) out << " " << p.lk(i, j).get_str();
    out << "\n";
  }
  return out.str();
}

std::size_t component_arg(const SurgeryPresentation& p, const std::string& arg) {
  if (!arg.empty() && std::all_of(arg.begin(), arg.end(), ::isdigit)) {
    const std::size_t c = std::stoul(arg);
    if (c >= p.component_count()) throw UsageError("component index " + arg + " out of range");
    return c;
  }
  try {
    return p.index_of(arg);
  } catch (const Error&) {
    throw UsageError("no component named '" + arg + "'");
  }
}

struct AlexResult {
  LaurentPoly delta;
  Integer determinant;
};

// Cached by canonical PD; the cached text is exactly what a fresh
// computation would serialize.
class AlexanderService {
 public:
  explicit AlexanderService(const Globals& g) {
    if (!g.no_cache) cache_.emplace(Cache::default_root(g.cache_dir));
  }
  AlexResult compute(const LinkDiagram& d) {
    const std::string key = "alexander\n" + serialize_pd(d.canonical());
    if (cache_) {
      if (auto hit = cache_->get(key)) {
        const Json j = Json::parse(*hit, nullptr, false);
        if (!j.is_discarded() && j.contains("delta") && j.contains("determinant"))
          return {laurent_from_json(j["delta"]), integer_from_json(j["determinant"])};
      }
    }
    AlexResult r;
    r.delta = alexander_polynomial(d);
    r.determinant = abs(r.delta.evaluate(-1));
    if (cache_) {
      const Json value = {{"delta", laurent_json(r.delta)}, {"determinant", integer_json(r.determinant)}};
      cache_->put(key, value.dump());
    }
    return r;
  }

 private:
  std::optional<Cache> cache_;
};

std::string coefficient_list(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (long e = p.min_exponent(); e <= p.max_exponent(); ++e) s += (s.empty() ? "" : " ") + p.coefficient(e).get_str();
  return s;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surgery presentations, Rolfsen twists and twist families of knots", "surgeon"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (default: $SURGEON_CACHE_DIR, then the data directory)");
  app.add_flag("--no-cache", g.no_cache, "Compute without reading or writing the cache");
  app.set_version_flag("--version", std::string(SURGEON_VERSION));

  std::function<int()> action;
  LinkInput input;
  auto add_link = [&](CLI::App* sub) {
    sub->add_option("--link", input.link, "PD file, or a .json family asset (default: built-in family link)");
  };

  // parse
  auto* parse = app.add_subcommand("parse", "Parse a PD file and print its canonical form");
  std::string parse_file, parse_text;
  parse->add_option("file", parse_file, "PD file");
  parse->add_option("--pd", parse_text, "PD text given inline");
  parse->callback([&] {
    action = [&] {
      if (parse_file.empty() == parse_text.empty()) throw UsageError("give exactly one of FILE or --pd");
      const LinkDiagram d = parse_text.empty() ? parse_pd(read_file(parse_file), fs::path(parse_file).stem().string())
                                               : parse_pd(parse_text);
      const LinkDiagram c = d.canonical();
      std::vector<int> writhes;
      for (std::size_t i = 0; i < d.component_count(); ++i) writhes.push_back(writhe(d, i));
      if (g.json) {
        print(out, {{"components", d.component_count()},
                    {"crossings", d.crossing_count()},
                    {"writhes", writhes},
                    {"pd", serialize_pd(c)}});
      } else {
        out << "components " << d.component_count() << "\ncrossings " << d.crossing_count() << "\nwrithes";
        for (int w : writhes) out << " " << w;
        out << "\n" << serialize_pd(c) << "\n";
      }
      return 0;
    };
  });

  // lk
  auto* lk = app.add_subcommand("lk", "Linking matrix of a link");
  add_link(lk);
  lk->callback([&] {
    action = [&] {
      const SurgeryPresentation p = input.load();
      if (g.json) {
        print(out, {{"names", p.names()}, {"linking", presentation_json(p)["linking"]}});
      } else {
        out << linking_text(p);
      }
      return 0;
    };
  });

  // h1
  auto* h1 = app.add_subcommand("h1", "First homology of the surgered manifold");
  add_link(h1);
  std::string h1_slopes;
  h1->add_option("--slopes", h1_slopes, "Comma-separated slopes p/q, 1/0 or *")->required();
  h1->callback([&] {
    action = [&] {
      const SurgeryPresentation p = input.load(parse_slopes(h1_slopes));
      const AbelianGroup grp = first_homology(p);
      if (g.json)
        print(out, {{"slopes", presentation_json(p)["slopes"]}, {"homology", group_json(grp)}});
      else
        out << grp.to_string() << "\n";
      return 0;
    };
  });

  // twist
  auto* twist = app.add_subcommand("twist", "Rolfsen twist along an unknotted component");
  add_link(twist);
  twist->add_flag("--assume-unknotted", input.assume_unknotted,
                  "Treat every component of a PD link as unknotted (drops the diagram)");
  std::string tw_slopes, tw_component;
  long tw_t = 0;
  bool tw_delete = false;
  twist->add_option("--slopes", tw_slopes, "Comma-separated slopes")->required();
  twist->add_option("--component", tw_component, "Component name or index")->required();
  twist->add_option("--t", tw_t, "Number of full twists (right-handed when positive)")->required();
  twist->add_flag("--delete", tw_delete, "Delete the component afterwards (its slope must become 1/0)");
  twist->callback([&] {
    action = [&] {
      const SurgeryPresentation p = input.load(parse_slopes(tw_slopes));
      const std::size_t c = component_arg(p, tw_component);
      std::vector<Move> script{Move::twist(c, tw_t)};
      if (tw_delete) script.push_back(Move::remove(c));
      const ScriptResult r = apply_move_script(p, script);
      const SurgeryPresentation& q = r.result;
      if (g.json) {
        print(out, {{"result", presentation_json(q)}, {"trace", trace_json(r.trace)}});
      } else {
        out << "slopes " << slopes_text(q.slopes()) << "\n" << linking_text(q);
        out << "homology " << r.trace.back().homology.to_string() << "\n";
        if (q.diagram()) out << serialize_pd(*q.diagram()) << "\n";
      }
      return 0;
    };
  });

  // family
  auto* family = app.add_subcommand("family", "Same-surgery evidence for k_n^m over a range of m");
  std::string fam_asset, fam_report, fam_m = "0..3";
  long fam_n = 0;
  family->add_option("--asset", fam_asset, "Family asset JSON (default: built-in)");
  family->add_option("--n", fam_n, "Twist parameter n")->required();
  family->add_option("--m-range", fam_m, "Range a..b of m values");
  family->add_option("--report", fam_report, "Write the JSON reports to this file");
  family->callback([&] {
    action = [&] {
      const Range mr = parse_range(fam_m);
      const TwistFamily fam(load_asset(fam_asset));
      Json reports = Json::array();
      bool all_match = true, complete = true;
      std::ostringstream text;
      for (long a = mr.lo; a <= mr.hi; ++a) {
        for (long b = a + 1; b <= mr.hi; ++b) {
          const EvidenceReport r = fam.same_surgery_evidence(fam_n, a, b);
          all_match = all_match && r.h1_match;
          complete = complete && r.complete;
          reports.push_back(report_json(r));
          text << "n=" << fam_n << " m1=" << a << " m2=" << b << " H1 " << r.group1.to_string() << " | "
               << r.group2.to_string() << (r.h1_match ? " match" : " MISMATCH") << " common-form "
               << (r.common_form_match ? "yes" : "no") << " alpha " << r.slope1.alpha.to_string() << ","
               << r.slope2.alpha.to_string() << "\n";
        }
      }
      const Json doc = {{"n", fam_n}, {"m_range", {mr.lo, mr.hi}}, {"all_h1_match", all_match}, {"reports", reports}};
      if (!fam_report.empty()) write_file(fam_report, doc.dump(2) + "\n");
      if (g.json) {
        print(out, doc);
      } else {
        out << text.str() << "all h1_match " << (all_match ? "true" : "false") << "\n";
      }
      return complete ? 0 : 1;
    };
  });

  // slope
  auto* slope = app.add_subcommand("slope", "Induced surgery slope alpha(m, n)");
  std::string sl_asset;
  long sl_m = 0, sl_n = 0;
  slope->add_option("--asset", sl_asset, "Family asset JSON (default: built-in)");
  slope->add_option("--m", sl_m, "m")->required();
  slope->add_option("--n", sl_n, "n")->required();
  slope->callback([&] {
    action = [&] {
      const SlopeDerivation s = TwistFamily(load_asset(sl_asset)).induced_surgery_slope(sl_m, sl_n);
      if (g.json)
        print(out, slope_derivation_json(s));
      else
        out << s.alpha.to_string() << "\n";
      return 0;
    };
  });

  // cable-reduce
  auto* cable = app.add_subcommand("cable-reduce", "Reduce surgery on a cable to surgery on its companion");
  std::string cb_slope, cb_cable;
  cable->add_option("--slope", cb_slope, "Slope p/q on the cable")->required();
  cable->add_option("--cable", cb_cable, "Cable parameters a,b")->required();
  cable->callback([&] {
    action = [&] {
      const Slope s = flag_slope(cb_slope);
      const Cable c = parse_cable(cb_cable);
      const Slope r = cable_surgery_reduction(s, c);
      if (g.json)
        print(out, {{"slope", slope_json(s)}, {"cable", {integer_json(c.a), integer_json(c.b)}}, {"companion_slope", slope_json(r)}});
      else
        out << r.to_string() << "\n";
      return 0;
    };
  });

  // alex
  auto* alex = app.add_subcommand("alex", "Alexander polynomial and determinant");
  std::string al_link, al_asset, al_m, al_n, al_csv;
  alex->add_option("--link", al_link, "PD file of a knot");
  alex->add_option("--asset", al_asset, "Family asset JSON (default: built-in)");
  alex->add_option("--m-range", al_m, "Family sweep: range of m");
  alex->add_option("--n-range", al_n, "Family sweep: range of n");
  alex->add_option("--csv", al_csv, "Write the sweep table to this CSV file");
  alex->callback([&] {
    action = [&] {
      AlexanderService svc(g);
      if (!al_link.empty()) {
        if (!al_m.empty() || !al_n.empty()) throw UsageError("--link cannot be combined with a family sweep");
        const LinkDiagram d = parse_pd(read_file(al_link));
        const AlexResult r = svc.compute(d);
        if (g.json)
          print(out, {{"delta", laurent_json(r.delta)}, {"text", r.delta.to_string()},
                      {"determinant", integer_json(r.determinant)}});
        else
          out << r.delta.to_string() << "\ndeterminant " << r.determinant.get_str() << "\n";
        return 0;
      }
      if (al_m.empty() || al_n.empty()) throw UsageError("give --link, or both --m-range and --n-range");
      const Range mr = parse_range(al_m), nr = parse_range(al_n);
      const TwistFamily fam(load_asset(al_asset));
      Json rows = Json::array(), separation = Json::array();
      std::ostringstream text, csv;
      csv << "m,n,crossings,determinant,min_exponent,coefficients\n";
      for (long n = nr.lo; n <= nr.hi; ++n) {
        std::set<std::string> distinct;
        for (long m = mr.lo; m <= mr.hi; ++m) {
          const LinkDiagram d = fam.knot_diagram(m, n).diagram;
          const AlexResult r = svc.compute(d);
          distinct.insert(r.delta.to_string());
          const long lo = r.delta.is_zero() ? 0 : r.delta.min_exponent();
          rows.push_back({{"m", m}, {"n", n}, {"crossings", d.crossing_count()}, {"delta", laurent_json(r.delta)},
                          {"text", r.delta.to_string()}, {"determinant", integer_json(r.determinant)}});
          text << "m=" << m << " n=" << n << " crossings=" << d.crossing_count() << " det=" << r.determinant.get_str()
               << " delta=" << r.delta.to_string() << "\n";
          csv << m << "," << n << "," << d.crossing_count() << "," << r.determinant.get_str() << "," << lo << ","
              << coefficient_list(r.delta) << "\n";
        }
        const std::size_t members = static_cast<std::size_t>(mr.hi - mr.lo + 1);
        separation.push_back({{"n", n}, {"members", members}, {"distinct_polynomials", distinct.size()}});
        text << "n=" << n << ": " << distinct.size() << " distinct polynomials among " << members << " members\n";
      }
      if (!al_csv.empty()) write_file(al_csv, csv.str());
      if (g.json)
        print(out, {{"rows", rows}, {"separation", separation}});
      else
        out << text.str();
      return 0;
    };
  });

  // export
  auto* exp = app.add_subcommand("export", "Write the family asset and DT codes of family members");
  std::string ex_dir = ".", ex_asset, ex_m, ex_n;
  exp->add_option("--out", ex_dir, "Output directory");
  exp->add_option("--asset", ex_asset, "Family asset JSON (default: built-in)");
  exp->add_option("--m-range", ex_m, "Write k_n_m.dt for this range of m");
  exp->add_option("--n-range", ex_n, "... and this range of n");
  exp->callback([&] {
    action = [&] {
      const FamilyAsset asset = load_asset(ex_asset);
      const TwistFamily fam(asset);
      std::vector<std::string> written;
      const fs::path dir(ex_dir);
      write_file(dir / "L.pd", serialize_pd(*asset.base.diagram()) + "\n");
      write_file(dir / "L.json", asset_json(asset).dump(2) + "\n");
      written = {(dir / "L.pd").string(), (dir / "L.json").string()};
      if (ex_m.empty() != ex_n.empty()) throw UsageError("give both --m-range and --n-range");
      if (!ex_m.empty()) {
        const Range mr = parse_range(ex_m), nr = parse_range(ex_n);
        for (long n = nr.lo; n <= nr.hi; ++n)
          for (long m = mr.lo; m <= mr.hi; ++m) {
            const fs::path file = dir / ("k_" + std::to_string(n) + "_" + std::to_string(m) + ".dt");
            write_file(file, dt_export(fam.knot_diagram(m, n).diagram) + "\n");
            written.push_back(file.string());
          }
      }
      if (g.json)
        print(out, {{"written", written}});
      else
        for (const std::string& w : written) out << w << "\n";
      return 0;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  std::string vf_scratch;
  verify->add_option("--scratch", vf_scratch, "Writable directory for cache round trips");
  verify->callback([&] {
    action = [&] {
      acceptance::Options opt;
      opt.scratch = vf_scratch.empty() ? fs::temp_directory_path() / "surgeon-verify" : fs::path(vf_scratch);
      opt.cli = [](const std::vector<std::string>& a, std::string& captured) {
        std::ostringstream o, e;
        const int code = run(a, o, e);
        captured = o.str();
        return code;
      };
      const auto results = acceptance::run_all(opt);
      bool ok = true;
      Json arr = Json::array();
      for (const auto& r : results) {
        ok = ok && r.pass;
        arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        if (!g.json) out << acceptance::format_line(r) << "\n";
      }
      if (g.json) print(out, arr);
      return ok ? 0 : 1;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << SURGEON_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace surgeon::cli
