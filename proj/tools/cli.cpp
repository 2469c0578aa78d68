#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qinv/diagram.hpp"
#include "qinv/errors.hpp"
#include "qinv/fusion.hpp"
#include "qinv/gq.hpp"
#include "qinv/skein.hpp"
#include "qinv/tqft.hpp"

namespace qinv::cli {

namespace {

using nlohmann::json;

struct DiagramInput {
  std::string braid;
  std::string pd;

  void attach(CLI::App* sub) {
    auto* b = sub->add_option("--braid", braid, "braid word, e.g. \"B2 1 1 1\"");
    auto* p = sub->add_option("--pd", pd, "planar diagram, e.g. \"X(1,4,2,3) X(3,2,4,1)\"");
    b->excludes(p);
  }

  LinkDiagram load() const {
    if (!braid.empty()) return braid_closure(parse_braid(braid));
    if (!pd.empty()) return parse_pd(pd);
    throw CLI::RequiredError("one of --braid or --pd");
  }
};

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  return "(" + format_double(z.real()) + ", " + format_double(z.imag()) + ")";
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::string read_text(const std::string& path_or_inline) {
  if (!path_or_inline.empty() && (path_or_inline.front() == '[' || path_or_inline.front() == '{')) {
    return path_or_inline;
  }
  std::ifstream in(path_or_inline);
  if (!in) throw ParseError("cannot open '" + path_or_inline + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

FrobeniusAlgebra load_algebra(const std::string& arg) {
  if (arg == "z2") return z2_group_algebra();
  if (arg.rfind("verlinde:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(arg.substr(9));
    } catch (const std::exception&) {
      throw ParseError("bad level in '" + arg + "'");
    }
    return frobenius_from_fusion(FusionLevel(k));
  }
  return frobenius_from_json(parse_json_text(read_text(arg)));
}

void print(std::ostream& out, bool as_json, const json& doc, const std::string& text) {
  if (as_json) {
    out << doc.dump() << '\n';
  } else {
    out << text;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"knot invariants, SU(2)_k fusion, 2d TQFTs and prequantization", "qinv"};
  app.require_subcommand(1, 1);
  bool as_json = false;
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "emit one JSON document"); };

  std::function<void()> action;

  // jones / bracket / parse / skein-check
  DiagramInput jones_in;
  std::optional<int> jones_level;
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial in s = q^(1/2)");
  jones_in.attach(jones_cmd);
  jones_cmd->add_option("--level", jones_level, "also evaluate at q = exp(2 pi i/(k+2))")
      ->check(CLI::PositiveNumber);
  add_json(jones_cmd);
  jones_cmd->callback([&] {
    action = [&] {
      const LinkDiagram d = jones_in.load();
      const JonesPolynomial v = jones(d);
      json doc = {{"jones", to_json(v.poly())}, {"components", component_count(d)}};
      std::string text = v.poly().to_string() + "\n";
      if (jones_level) {
        const auto z = jones_at_level(v, *jones_level);
        doc["level"] = *jones_level;
        doc["value"] = complex_json(z);
        text += "at level " + std::to_string(*jones_level) + ": " + format_complex(z) + "\n";
      }
      print(out, as_json, doc, text);
    };
  });

  DiagramInput bracket_in;
  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket in A");
  bracket_in.attach(bracket_cmd);
  add_json(bracket_cmd);
  bracket_cmd->callback([&] {
    action = [&] {
      const IntLaurent b = kauffman_bracket(bracket_in.load());
      print(out, as_json, json{{"bracket", to_json(b)}}, b.to_string() + "\n");
    };
  });

  DiagramInput parse_in;
  auto* parse_cmd = app.add_subcommand("parse", "validate a diagram and echo its structure");
  parse_in.attach(parse_cmd);
  add_json(parse_cmd);
  parse_cmd->callback([&] {
    action = [&] {
      const LinkDiagram d = parse_in.load();
      const json doc = d.to_json();
      std::string text = "pd: " + d.to_pd_string() + "\nsigns:";
      for (const auto& c : d.crossings()) text += c.sign > 0 ? " +1" : " -1";
      text += "\ncomponents: " + std::to_string(component_count(d)) + "\n";
      if (d.free_loops() > 0) text += "free loops: " + std::to_string(d.free_loops()) + "\n";
      print(out, as_json, doc, text);
    };
  });

  DiagramInput skein_in;
  std::optional<int> skein_crossing;
  std::optional<int> skein_level;
  auto* skein_cmd = app.add_subcommand("skein-check", "verify q^-1 V(L+) - q V(L-) - (q^1/2 - q^-1/2) V(L0) = 0");
  skein_in.attach(skein_cmd);
  skein_cmd->add_option("--crossing", skein_crossing, "1-based crossing index (default: all)")
      ->check(CLI::PositiveNumber);
  skein_cmd->add_option("--level", skein_level, "also check numerically at q = exp(2 pi i/(k+2))")
      ->check(CLI::PositiveNumber);
  add_json(skein_cmd);
  int skein_status = kExitOk;
  skein_cmd->callback([&] {
    action = [&] {
      const LinkDiagram d = skein_in.load();
      std::vector<std::size_t> indices;
      if (skein_crossing) {
        if (static_cast<std::size_t>(*skein_crossing) > d.crossing_count()) {
          throw RangeError("crossing " + std::to_string(*skein_crossing) + " out of range (1.." +
                           std::to_string(d.crossing_count()) + ")");
        }
        indices.push_back(static_cast<std::size_t>(*skein_crossing - 1));
      } else {
        for (std::size_t i = 0; i < d.crossing_count(); ++i) indices.push_back(i);
      }
      JonesCache cache;
      json results = json::array();
      std::string text;
      for (std::size_t i : indices) {
        const IntLaurent r = skein_residual(d, i, cache);
        if (!r.is_zero()) skein_status = kExitDomain;
        json entry = {{"crossing", i + 1}, {"sign", d.sign(i)}, {"residual", to_json(r)}};
        text += "crossing " + std::to_string(i + 1) + ": " + r.to_string();
        if (skein_level) {
          const double modulus = std::abs(skein_residual_at_level(d, i, *skein_level, cache));
          entry["modulus_at_level"] = modulus;
          text += " (|residual| at level " + std::to_string(*skein_level) + " = " + format_double(modulus) + ")";
        }
        text += "\n";
        results.push_back(std::move(entry));
      }
      if (indices.empty()) text = "no crossings\n";
      json doc = {{"results", std::move(results)}, {"zero", skein_status == kExitOk}};
      if (skein_level) doc["level"] = *skein_level;
      print(out, as_json, doc, text);
    };
  });

  // fusion-dim / verlinde
  int fusion_level = 0;
  std::vector<int> fusion_marked;
  auto* fusion_cmd = app.add_subcommand("fusion-dim", "conformal-block dimension by counting fusion paths");
  fusion_cmd->add_option("--level", fusion_level, "level k >= 1")->required();
  fusion_cmd->add_option("--marked", fusion_marked, "comma-separated labels 0..k")->delimiter(',')->required();
  add_json(fusion_cmd);
  fusion_cmd->callback([&] {
    action = [&] {
      const auto dim = block_dim_sphere(FusionLevel(fusion_level), fusion_marked);
      print(out, as_json, json{{"dim", dim}, {"method", "paths"}}, std::to_string(dim) + "\n");
    };
  });

  int verlinde_level = 0;
  int verlinde_genus = 0;
  std::vector<int> verlinde_marked;
  auto* verlinde_cmd = app.add_subcommand("verlinde", "conformal-block dimension by the Verlinde formula");
  verlinde_cmd->add_option("--level", verlinde_level, "level k >= 1")->required();
  verlinde_cmd->add_option("--genus", verlinde_genus, "genus g >= 0")->check(CLI::NonNegativeNumber);
  verlinde_cmd->add_option("--marked", verlinde_marked, "comma-separated labels 0..k")->delimiter(',');
  add_json(verlinde_cmd);
  verlinde_cmd->callback([&] {
    action = [&] {
      const FusionLevel lv(verlinde_level);
      const VerlindeValue v = verlinde_sum(lv, verlinde_genus, verlinde_marked);
      const auto dim = verlinde_dim(lv, verlinde_genus, verlinde_marked);
      print(out, as_json, json{{"dim", dim}, {"method", "verlinde"}, {"residual", v.residual}},
            std::to_string(dim) + "\n");
    };
  });

  // tqft-eval
  std::string algebra_arg;
  std::string cobordism_arg;
  auto* tqft_cmd = app.add_subcommand("tqft-eval", "evaluate a cobordism word in a Frobenius-algebra TQFT");
  tqft_cmd->add_option("--algebra", algebra_arg, "JSON file, or z2, or verlinde:<k>")->required();
  tqft_cmd->add_option("--cobordism", cobordism_arg, "JSON file or inline JSON word")->required();
  add_json(tqft_cmd);
  tqft_cmd->callback([&] {
    action = [&] {
      const FrobeniusAlgebra f = load_algebra(algebra_arg);
      const FrobeniusReport report = validate_frobenius(f);
      if (!report.valid()) {
        std::string why = "not a commutative Frobenius algebra:";
        for (const auto& v : report.violations) why += "\n  " + v;
        throw ValidityError(why);
      }
      const Cobordism c = cobordism_from_json(parse_json_text(read_text(cobordism_arg)));
      const StateSpaceMap z = evaluate(f, c);
      json doc = {{"source", c.source()}, {"target", c.target()}, {"matrix", z.to_json()}};
      print(out, as_json, doc, z.to_string());
    };
  });

  // gq-check
  std::string gq_f;
  std::string gq_g;
  std::string gq_rep = "prequantum";
  auto* gq_cmd = app.add_subcommand("gq-check", "Dirac condition [Q(f),Q(g)] + i hbar Q({f,g}) = 0");
  gq_cmd->add_option("--f", gq_f, "observable, e.g. \"q1^2*p1 + 3*q2\"")->required();
  gq_cmd->add_option("--g", gq_g, "observable")->required();
  gq_cmd->add_option("--rep", gq_rep, "prequantum | schrodinger")
      ->check(CLI::IsMember({"prequantum", "schrodinger"}));
  add_json(gq_cmd);
  int gq_status = kExitOk;
  gq_cmd->callback([&] {
    action = [&] {
      const int n = std::max(infer_phase_dim(gq_f), infer_phase_dim(gq_g));
      const VariableNames names = phase_space_names(n);
      const PolyObservable f = parse_poly(gq_f, names);
      const PolyObservable g = parse_poly(gq_g, names);
      const bool schrodinger = gq_rep == "schrodinger";
      const DiffOperator r = schrodinger ? schrodinger_dirac_residual(f, g) : dirac_residual(f, g);
      const std::string shown = r.to_string(schrodinger ? position_names(n) : names);
      if (!r.is_zero()) gq_status = kExitDomain;
      json doc = {{"n", n},
                  {"rep", gq_rep},
                  {"poisson", poisson(f, g).to_string(names)},
                  {"residual", shown},
                  {"zero", r.is_zero()}};
      print(out, as_json, doc, shown + "\n");
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    action();
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  if (skein_status != kExitOk) return skein_status;
  return gq_status;
}

}  // namespace qinv::cli
