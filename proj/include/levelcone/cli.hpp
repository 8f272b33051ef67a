#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "levelcone/bounds.hpp"
#include "levelcone/cancellation.hpp"
#include "levelcone/census.hpp"
#include "levelcone/diagram.hpp"
#include "levelcone/error.hpp"
#include "levelcone/hvec_analysis.hpp"
#include "levelcone/io.hpp"
#include "levelcone/lex.hpp"
#include "levelcone/pure.hpp"

namespace levelcone {

/// Exit codes: the checked condition holds, fails, or the input was unusable.
enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

/// Errors that report a property of valid input rather than bad input.
inline bool is_condition_failure(Errc code) {
  switch (code) {
    case Errc::NotInCone:
    case Errc::NotShiftSeparated:
    case Errc::NotACancellation:
    case Errc::NotOSequence:
    case Errc::NotModuleHVector:
    case Errc::CertificateFailed:
    case Errc::NegativeEntry:
    case Errc::NoConsistentFill:
    case Errc::NotLevelShape:
    case Errc::NoSignChange:
      return true;
    default:
      return false;
  }
}

namespace cli_detail {

/// Argument text, or the contents of the file when it starts with '@'.
inline std::string read_arg(const std::string& text) {
  if (text.empty() || text.front() != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw Error(Errc::ParseError, "cannot read " + text.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline HVector read_h(const std::string& text) { return hvector_from_json(parse_json(read_arg(text))); }
inline BettiDiagram read_diagram(const std::string& text) {
  return diagram_from_json(parse_json(read_arg(text)));
}


inline std::string join(const std::vector<Rational>& list) {
  std::string out;
  for (const auto& q : list) out += (out.empty() ? "" : " ") + to_string(q);
  return out;
}

inline std::string combo_str(const PureCombo& combo) {
  std::string out;
  for (const auto& t : combo.terms) out += "  " + to_string(t.coeff) + " * pi" + t.type.str() + "\n";
  return out;
}

inline Json census_json(const CensusReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"h", to_json(e.h)},
                       {"text", hvector_str(e.h)},
                       {"macaulay_both", e.flags.macaulay_both},
                       {"normhvec", e.flags.normhvec},
                       {"exact_dual_cancellable", e.flags.exact_dual_cancellable},
                       {"rational_dual_cancellable", e.flags.rational_dual_cancellable},
                       {"wlp", e.flags.wlp}});
  auto list = [](const std::vector<HVector>& hs) {
    Json out = Json::array();
    for (const auto& h : hs) out.push_back(hvector_str(h));
    return out;
  };
  return {
      {"params",
       {{"h0", r.h0}, {"hc", r.hc}, {"c", r.c}, {"vars", r.p}, {"allow_degenerate", r.allow_degenerate}}},
      {"counts",
       {{"total", r.total()},
        {"normhvec", r.count(&CensusFlags::normhvec)},
        {"exact_dual_cancellable", r.count(&CensusFlags::exact_dual_cancellable)},
        {"rational_dual_cancellable", r.count(&CensusFlags::rational_dual_cancellable)},
        {"wlp", r.count(&CensusFlags::wlp)}}},
      {"lists",
       {{"exact_not_normhvec",
         list(r.select([](const CensusFlags& f) { return f.exact_dual_cancellable && !f.normhvec; }))},
        {"normhvec_not_exact",
         list(r.select([](const CensusFlags& f) { return f.normhvec && !f.exact_dual_cancellable; }))}}},
      {"entries", entries}};
}

inline std::string census_text(const CensusReport& r) {
  std::ostringstream out;
  out << "census h0=" << r.h0 << " hc=" << r.hc << " c=" << r.c << " vars=" << r.p
      << (r.allow_degenerate ? " (degenerate h_1 allowed)" : "") << "\n";
  auto row = [&out](const std::string& name, std::size_t n) {
    out << "  " << std::left << std::setw(27) << name << std::right << std::setw(6) << n << "\n";
  };
  row("total", r.total());
  row("normhvec", r.count(&CensusFlags::normhvec));
  row("exact_dual_cancellable", r.count(&CensusFlags::exact_dual_cancellable));
  row("rational_dual_cancellable", r.count(&CensusFlags::rational_dual_cancellable));
  row("wlp", r.count(&CensusFlags::wlp));
  auto list = [&out](const std::string& title, const std::vector<HVector>& hs) {
    out << title << " (" << hs.size() << "):\n";
    for (const auto& h : hs) out << "  " << hvector_str(h) << "\n";
  };
  list("exact dual-cancellable, not normhvec",
       r.select([](const CensusFlags& f) { return f.exact_dual_cancellable && !f.normhvec; }));
  list("normhvec, not exact dual-cancellable",
       r.select([](const CensusFlags& f) { return f.normhvec && !f.exact_dual_cancellable; }));
  return out.str();
}

}  // namespace cli_detail

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Exact Betti diagram, h-vector and level-module bound computations", "levelcone"};
  app.require_subcommand(1);
  // "--h" names the h-vector, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  std::string format = "text";
  std::string h_arg, diagram_arg, cert_arg, to_arg, json_path;
  int vars = 3, j = 0, c = 0, k = 0, dk = 0;
  long long gens = 1, h0 = 1, hc = 1;
  unsigned threads = 0;
  bool exact = false, inverse = false, normalized = false, allow_degenerate = false;
  std::function<int()> action;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_h = [&](CLI::App* cmd) {
    cmd->add_option("--h", h_arg, "h-vector as JSON, or @file")->required();
  };
  auto add_vars = [&](CLI::App* cmd) {
    cmd->add_option("--vars", vars, "Number of variables (codimension)")->check(CLI::PositiveNumber);
  };
  auto add_diagram = [&](CLI::App* cmd) {
    cmd->add_option("--diagram", diagram_arg, "Diagram as JSON, or @file")->required();
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<int()> run) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_format(cmd);
    cmd->callback([&action, run] { action = run; });
    return cmd;
  };
  auto emit = [&](const Json& json, const std::string& text) {
    if (format == "json")
      out << json.dump(2) << "\n";
    else
      out << text;
  };

  // hvec ---------------------------------------------------------------
  CLI::App* hvec = app.add_subcommand("hvec", "h-vector conditions")->require_subcommand(1);

  auto* check = leaf(hvec, "check", "Extremely compressed decomposition and its determinants", [&] {
    const HVector h = read_h(h_arg);
    const LevelWitness w = level_condition(h, vars);
    Json json{{"pass", w.pass},       {"f", to_json(w.f)}, {"dets", to_json(w.dets)},
              {"combo", to_json(w.combo)}, {"diagram", to_json(w.diagram)}};
    std::string text = std::string("level condition: ") + (w.pass ? "pass" : "fail") + "\n" +
                       "f: " + join(w.f) + "\ndets: " + join(w.dets) + "\n" +
                       combo_str(w.combo) + render_diagram(w.diagram);
    emit(json, text);
    return w.pass ? kPass : kFail;
  });
  add_h(check);
  add_vars(check);

  auto* ecomp = leaf(hvec, "ecomp", "h-vector of an extremely compressed pure diagram", [&] {
    const PureType type = ecomp_type(0, j, c, vars);
    const HVector h = ecomp_hvector(j, c, vars);
    const BettiDiagram d = pure_diagram(type);
    emit({{"type", to_json(type)}, {"h", to_json(h)}, {"diagram", to_json(d)}},
         "type " + type.str() + "\nh = " + hvector_str(h) + "\n" + render_diagram(d));
    return kPass;
  });
  ecomp->add_option("--j", j, "Index j with 0 <= j <= c")->required();
  ecomp->add_option("--c", c, "Socle degree")->required();
  add_vars(ecomp);

  auto* wlp = leaf(hvec, "wlp", "Weak Lefschetz upper bound construction", [&] {
    const HVector h = read_h(h_arg);
    const WlpData w = wlp_condition(h, vars);
    Json json{{"pass", w.pass},         {"u", w.u},           {"f", to_json(w.f)},
              {"g", to_json(w.g)},      {"F", to_json(w.F)},  {"G", to_json(w.G)},
              {"E", to_json(w.E)},      {"decomposition", nullptr}};
    std::string text = std::string("wlp condition: ") + (w.pass ? "pass" : "fail") +
                       "\nu = " + std::to_string(w.u) + "\nf: " + join(w.f) + "\ng: " + join(w.g) +
                       "\nF:\n" + render_diagram(w.F) + "G:\n" + render_diagram(w.G) + "E:\n" +
                       render_diagram(w.E);
    if (w.decomposition) {
      json["decomposition"] = to_json(*w.decomposition);
      text += "decomposition of E:\n" + combo_str(*w.decomposition);
    }
    emit(json, text);
    return w.pass ? kPass : kFail;
  });
  add_h(wlp);
  add_vars(wlp);

  auto* cancellable = leaf(hvec, "cancellable", "Rational and exact cancellability", [&] {
    const HVector h = read_h(h_arg);
    const CancellableMargins fwd = rational_cancellable(h, vars);
    const DualCancelConditions dual = rational_dual_cancellable(h, vars);
    Json json{{"rational_cancellable", fwd.pass},
              {"a", to_json(fwd.a)},
              {"margins", to_json(fwd.margins)},
              {"rational_dual_cancellable", dual.pass},
              {"exact_cancellable", nullptr},
              {"exact_dual_cancellable", nullptr}};
    std::string text = std::string("rational cancellable: ") + (fwd.pass ? "yes" : "no") +
                       "\nrational dual cancellable: " + (dual.pass ? "yes" : "no") +
                       "\na: " + join(fwd.a) + "\nmargins: " + join(fwd.margins) + "\n";
    bool pass = dual.pass;
    if (exact) {
      bool fwd_exact = false;
      bool both = false;
      try {
        fwd_exact = exact_cancellable(h, vars);
        both = fwd_exact && exact_cancellable(reverse(h), vars);
      } catch (const Error& e) {
        if (e.code() != Errc::NotOSequence) throw;
      }
      json["exact_cancellable"] = fwd_exact;
      json["exact_dual_cancellable"] = both;
      text += std::string("exact cancellable: ") + (fwd_exact ? "yes" : "no") +
              "\nexact dual cancellable: " + (both ? "yes" : "no") + "\n";
      pass = both;
    }
    emit(json, text);
    return pass ? kPass : kFail;
  });
  add_h(cancellable);
  add_vars(cancellable);
  cancellable->add_flag("--exact", exact, "Also decide exact cancellability via lex modules");

  // diagram ------------------------------------------------------------
  CLI::App* diag = app.add_subcommand("diagram", "Diagram operations")->require_subcommand(1);

  auto* dh = leaf(diag, "hvector", "h-vector and multiplicity", [&] {
    const BettiDiagram d = read_diagram(diagram_arg);
    const HVector h = hvector_of(d);
    emit({{"h", to_json(h)}, {"e", to_json(h.at_one())}},
         "h = " + hvector_str(h) + "\ne = " + to_string(h.at_one()) + "\n");
    return kPass;
  });
  add_diagram(dh);

  auto* dd = leaf(diag, "decompose", "Greedy decomposition into pure diagrams", [&] {
    const PureCombo combo = greedy_decompose(read_diagram(diagram_arg));
    emit({{"in_cone", true}, {"combo", to_json(combo)}}, combo_str(combo));
    return kPass;
  });
  add_diagram(dd);

  auto* dc = leaf(diag, "cancel", "Apply or solve for consecutive cancellations", [&] {
    const BettiDiagram d = read_diagram(diagram_arg);
    if (!to_arg.empty()) {
      const CancellationCertificate cert = cancellation_certificate(d, read_diagram(to_arg));
      std::string text;
      for (const auto& [key, b] : cert.amounts)
        text += "C^{" + std::to_string(key.first) + "," + std::to_string(key.second) + "} x " +
                to_string(b) + "\n";
      emit({{"certificate", to_json(cert)}}, text);
      return kPass;
    }
    if (cert_arg.empty()) throw Error(Errc::InvalidArgument, "give --cert or --to");
    const BettiDiagram result =
        apply_cancellations(d, certificate_from_json(parse_json(read_arg(cert_arg))));
    emit({{"diagram", to_json(result)}}, render_diagram(result));
    return kPass;
  });
  add_diagram(dc);
  dc->add_option("--cert", cert_arg, "Certificate to apply, as JSON or @file");
  dc->add_option("--to", to_arg, "Target diagram; prints the certificate");

  auto* dr = leaf(diag, "render", "Render with row j - i", [&] {
    const BettiDiagram d = read_diagram(diagram_arg);
    emit({{"text", render_diagram(d)}}, render_diagram(d));
    return kPass;
  });
  add_diagram(dr);

  auto* dp = leaf(diag, "phi", "Drop a single-entry column (or restore it)", [&] {
    const BettiDiagram d = read_diagram(diagram_arg);
    const BettiDiagram result = inverse ? phi_inverse(d, k, dk) : phi(d, k);
    emit({{"diagram", to_json(result)}}, render_diagram(result));
    return kPass;
  });
  add_diagram(dp);
  dp->add_option("--k", k, "Column")->required();
  dp->add_flag("--inverse", inverse, "Reinsert column k at row --dk");
  dp->add_option("--dk", dk, "Row of the reinserted entry");

  // lex ----------------------------------------------------------------
  CLI::App* lex = app.add_subcommand("lex", "Lexicographic modules")->require_subcommand(1);

  auto* lb = leaf(lex, "betti", "Betti diagram of the lex quotient", [&] {
    const HVector h = read_h(h_arg);
    if (normalized) {
      const NormalizedLex n = normalized_betti_lex(h, gens, vars);
      emit({{"stabilizer", n.stabilizer.str()}, {"diagram", to_json(n.diagram)}},
           "stabilizer " + n.stabilizer.str() + "\n" + render_diagram(n.diagram));
      return kPass;
    }
    const LexProfile profile = lex_profile(h, gens, vars);
    const BettiDiagram d = betti_lex(h, gens, vars);
    Json comps = Json::array();
    std::string text = render_diagram(d);
    for (const auto& comp : profile.components) {
      Json gensj = Json::array();
      std::string line;
      for (const auto& [deg, u] : comp.generators) {
        gensj.push_back(monomial_str(u));
        line += (line.empty() ? "" : ", ") + monomial_str(u);
      }
      comps.push_back({{"count", comp.count.str()}, {"generators", gensj}});
      text += comp.count.str() + " x (" + line + ")\n";
    }
    emit({{"diagram", to_json(d)}, {"components", comps}}, text);
    return kPass;
  });
  add_h(lb);
  add_vars(lb);
  lb->add_option("--gens", gens, "Generators in degree 0")->check(CLI::PositiveNumber);
  lb->add_flag("--normalized", normalized, "Scale by the stabilizer and divide back");

  auto* lo = leaf(lex, "osequence", "Macaulay's condition for R^s", [&] {
    const bool ok = module_o_sequence(read_h(h_arg), gens, vars);
    emit({{"pass", ok}}, std::string("o-sequence: ") + (ok ? "yes" : "no") + "\n");
    return ok ? kPass : kFail;
  });
  add_h(lo);
  add_vars(lo);
  lo->add_option("--gens", gens, "Generators in degree 0")->check(CLI::PositiveNumber);

  // bounds -------------------------------------------------------------
  CLI::App* bounds = app.add_subcommand("bounds", "Multiplicity bounds")->require_subcommand(1);

  auto* bm = leaf(bounds, "mc", "Min/max shift bounds on the multiplicity", [&] {
    const McBounds b = mc_bounds(read_diagram(diagram_arg));
    emit({{"lower", to_json(b.lower)},
          {"e", to_json(b.e)},
          {"upper", to_json(b.upper)},
          {"lower_ok", b.lower_ok},
          {"upper_ok", b.upper_ok}},
         "lower " + to_string(b.lower) + (b.lower_ok ? " <= " : " > ") + "e " + to_string(b.e) +
             (b.upper_ok ? " <= " : " > ") + "upper " + to_string(b.upper) + "\n");
    return b.lower_ok && b.upper_ok ? kPass : kFail;
  });
  add_diagram(bm);

  auto* bz = leaf(bounds, "zanello", "Bounds from the sign changes of (1-t)^3 h", [&] {
    const ZanelloBounds z = zanello_check(read_h(h_arg));
    const auto& i = z.indices;
    emit({{"indices", {i.n1, i.n2, i.N1, i.N2}},
          {"lower", to_json(z.lower)},
          {"e", to_json(z.e)},
          {"upper", to_json(z.upper)},
          {"lower_ok", z.lower_ok},
          {"upper_ok", z.upper_ok}},
         "indices " + std::to_string(i.n1) + " " + std::to_string(i.n2) + " " + std::to_string(i.N1) +
             " " + std::to_string(i.N2) + "\nlower " + to_string(z.lower) + ", e " + to_string(z.e) +
             ", upper " + to_string(z.upper) + "\n");
    return z.lower_ok && z.upper_ok ? kPass : kFail;
  });
  add_h(bz);

  auto* bc = leaf(bounds, "mc-cert", "Upper-bound certificate for a codim-3 level diagram", [&] {
    const McCertificate cert = mc_upper_certificate_codim3(read_h(h_arg), read_diagram(diagram_arg));
    const bool ok = cert.e <= cert.bound;
    emit({{"combo", to_json(cert.combo)},
          {"bound", to_json(cert.bound)},
          {"e", to_json(cert.e)},
          {"max_shifts", cert.max_shifts},
          {"cancellations", to_json(cert.cancellations)},
          {"E", to_json(cert.separated)}},
         combo_str(cert.combo) + "e " + to_string(cert.e) + " <= bound " + to_string(cert.bound) + "\n");
    return ok ? kPass : kFail;
  });
  add_h(bc);
  add_diagram(bc);

  // census -------------------------------------------------------------
  CLI::App* census = app.add_subcommand("census", "Enumerate and classify h-vectors")->require_subcommand(1);
  auto* cr = leaf(census, "run", "Run the census", [&] {
    CensusOptions options;
    options.allow_degenerate = allow_degenerate;
    options.threads = threads;
    const CensusReport report = run_census(h0, hc, c, vars, options);
    const Json json = census_json(report);
    if (!json_path.empty()) {
      std::ofstream file(json_path);
      if (!file) throw Error(Errc::InvalidArgument, "cannot write " + json_path);
      file << json.dump(2) << "\n";
    }
    emit(json, census_text(report));
    return kPass;
  });
  cr->add_option("--h0", h0, "h_0")->required()->check(CLI::PositiveNumber);
  cr->add_option("--hc", hc, "h_c")->required()->check(CLI::PositiveNumber);
  cr->add_option("--c", c, "Socle degree")->required()->check(CLI::NonNegativeNumber);
  add_vars(cr);
  cr->add_option("--json", json_path, "Also write the full report here");
  cr->add_flag("--allow-degenerate", allow_degenerate, "Let h_1 range below h_0 r_1");
  cr->add_option("--threads", threads, "Worker threads (LEVELCONE_THREADS caps this)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  if (!action) {
    err << app.help();
    return kInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_condition_failure(e.code()) ? kFail : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace levelcone
