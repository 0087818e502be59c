#pragma once

// orbit-bell command line: solids, bounds, reference, classify, z4-scan, z4-min.
//
// Exit codes: 0 ok, 1 other failure, 2 usage / unknown solid,
// 3 enumeration budget exceeded, 4 reference check failed.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbit_bell/orbit_bell.hpp"
#include "orbit_bell/reference_table.hpp"

namespace orbit_bell::cli {

enum class Format { Text, Structured, Delimited };

struct RunConfig {
  std::string command;
  std::string alice;
  std::string bob;
  std::string pair;
  Format format = Format::Text;
  std::string output_path;
  unsigned threads = 0;
  bool check = false;
  std::size_t polar_steps = 12;
  std::size_t azimuth_steps = 24;
  std::vector<std::string> points;
  std::size_t samples = 1'000'000;
};

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kBudget = 3, kCheckFailed = 4 };

inline std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

inline std::string fmt_vec(Vec3 v, const char* spec = "%.6f") {
  for (double* x : {&v.x, &v.y, &v.z})
    if (std::abs(*x) < 1e-12) *x = 0.0;  // no "-0.000000"
  return "(" + fmt(spec, v.x) + ", " + fmt(spec, v.y) + ", " + fmt(spec, v.z) + ")";
}

/// "sqrt(48)" when c² is within 1e-6 of a non-square integer, empty otherwise.
inline std::string sqrt_annotation(double c) {
  const double sq = c * c;
  const double k = std::round(sq);
  if (k <= 0 || std::abs(sq - k) > 1e-6) return {};
  const double r = std::round(c);
  if (std::abs(r * r - k) < 0.5) return {};  // c itself is an integer
  return "sqrt(" + fmt("%.0f", k) + ")";
}

/// A canonical solid name, or a path to an orbit record.
inline Orbit load_orbit(const std::string& name_or_path) {
  if (auto s = parse_solid(name_or_path)) return canonical_solid(*s);
  std::ifstream in(name_or_path);
  if (!in) throw Error(ErrorKind::UnknownSolid, "'" + name_or_path + "' is neither a solid nor a readable orbit file");
  return read_orbit(in);
}

inline Solid require_solid(const std::string& name) {
  if (auto s = parse_solid(name)) return *s;
  throw Error(ErrorKind::UnknownSolid, "'" + name + "'");
}

inline std::string group_label(const std::string& rep_name) {
  return rep_name == "Oh" ? "O_h" : rep_name;
}

inline void write_bound_text(std::ostream& out, const BoundResult& r) {
  out << r.alice_label << " (N_A=" << r.n_a << ") vs " << r.bob_label << " (N_B=" << r.n_b << ")\n";
  out << "  classical bound C = " << fmt("%.10g", r.classical_bound);
  if (auto a = sqrt_annotation(r.classical_bound); !a.empty()) out << "  = " << a;
  out << "\n  quantum value   B = " << fmt("%.10g", r.quantum_value) << "\n";
  out << "  ratio         B/C = " << fmt("%.10g", r.ratio) << "\n";
  out << "  alice strategy    = " << r.alice_strategy.to_string() << "\n";
  out << "  bob strategy      = " << r.bob_strategy.to_string() << "\n";
}

inline std::string csv_bound_header() { return "alice,bob,n_a,n_b,classical_bound,quantum_value,ratio,alice_strategy,bob_strategy"; }

inline std::string csv_bound_row(const BoundResult& r) {
  std::ostringstream s;
  s << r.alice_label << ',' << r.bob_label << ',' << r.n_a << ',' << r.n_b << ',' << fmt("%.10g", r.classical_bound) << ','
    << fmt("%.10g", r.quantum_value) << ',' << fmt("%.10g", r.ratio) << ',' << r.alice_strategy.to_string() << ','
    << r.bob_strategy.to_string();
  return s.str();
}

inline int cmd_solids(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::Structured) {
    Json doc{{"solids", Json::array()}};
    for (Solid s : kAllSolids) doc["solids"].push_back(to_json(canonical_solid(s)));
    out << doc.dump(2) << "\n";
    return kOk;
  }
  if (cfg.format == Format::Delimited) out << "name,group,n,stabilizer_order,x0,y0,z0\n";
  for (Solid s : kAllSolids) {
    const Orbit o = canonical_solid(s);
    const Vec3 v = o.initial_vector;
    if (cfg.format == Format::Delimited) {
      out << o.label << ',' << group_label(o.rep_name) << ',' << o.size() << ',' << o.stabilizer_order << ','
          << fmt("%.17g", v.x) << ',' << fmt("%.17g", v.y) << ',' << fmt("%.17g", v.z) << "\n";
    } else {
      char line[160];
      std::snprintf(line, sizeof line, "%-22s group %-4s N = %-3zu stabilizer %-2zu initial ", o.label.c_str(),
                    group_label(o.rep_name).c_str(), o.size(), o.stabilizer_order);
      out << line << fmt_vec(v) << "\n";
    }
  }
  return kOk;
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const Orbit alice = load_orbit(cfg.alice);
  const Orbit bob = load_orbit(cfg.bob);
  const BoundResult r = classical_bound(gram(alice, bob), cfg.threads);
  switch (cfg.format) {
    case Format::Structured: out << to_json(r).dump(2) << "\n"; break;
    case Format::Delimited: out << csv_bound_header() << "\n" << csv_bound_row(r) << "\n"; break;
    case Format::Text: write_bound_text(out, r); break;
  }
  return kOk;
}

inline int cmd_reference(const RunConfig& cfg, std::ostream& out,
                      std::span<const ReferencePair> references = kReferencePairs) {
  bool ok = true;
  Json rows = Json::array();
  if (cfg.format == Format::Delimited)
    out << csv_bound_header() << (cfg.check ? ",ref_classical,ref_quantum,delta_classical,delta_quantum,pass" : "") << "\n";
  if (cfg.format == Format::Text) {
    char head[200];
    std::snprintf(head, sizeof head, "%-46s %12s %10s %8s", "Alice - Bob", "classical", "quantum", "ratio");
    out << head << (cfg.check ? "   dC          dB          check" : "") << "\n";
  }
  for (const auto& ref : references) {
    const BoundResult r = classical_bound(gram(canonical_solid(ref.alice), canonical_solid(ref.bob)), cfg.threads);
    const double dc = r.classical_bound - ref.classical;
    const double dq = r.quantum_value - ref.quantum;
    const bool pass = std::abs(dc) <= kReferenceTolerance && std::abs(dq) <= kReferenceTolerance;
    ok = ok && pass;
    switch (cfg.format) {
      case Format::Structured: {
        Json row = to_json(r);
        if (cfg.check)
          row["reference"] = {{"classical_bound", ref.classical},
                              {"quantum_value", ref.quantum},
                              {"delta_classical", round_significant(dc, 10)},
                              {"delta_quantum", round_significant(dq, 10)},
                              {"pass", pass}};
        rows.push_back(std::move(row));
        break;
      }
      case Format::Delimited:
        out << csv_bound_row(r);
        if (cfg.check)
          out << ',' << fmt("%.10g", ref.classical) << ',' << fmt("%.10g", ref.quantum) << ',' << fmt("%.3e", dc) << ','
              << fmt("%.3e", dq) << ',' << (pass ? "true" : "false");
        out << "\n";
        break;
      case Format::Text: {
        const std::string name = r.alice_label + " - " + r.bob_label;
        char line[200];
        std::snprintf(line, sizeof line, "%-46s %12.4f %10.4f %8.4f", name.c_str(), r.classical_bound, r.quantum_value,
                      r.ratio);
        out << line;
        if (cfg.check) out << "   " << fmt("%+.2e", dc) << "   " << fmt("%+.2e", dq) << "   " << (pass ? "ok" : "FAIL");
        if (auto a = sqrt_annotation(r.classical_bound); !a.empty()) out << "   C = " << a;
        out << "\n";
        break;
      }
    }
  }
  if (cfg.format == Format::Structured) {
    Json doc{{"rows", std::move(rows)}};
    if (cfg.check) doc["check"] = {{"tolerance", kReferenceTolerance}, {"pass", ok}};
    out << doc.dump(2) << "\n";
  }
  return (cfg.check && !ok) ? kCheckFailed : kOk;
}

struct Marker {
  std::size_t plus_count;
  Vec3 vector;
  std::string name;
};

inline Json decomposition_json(const ClassicalOrbitDecomposition& d, const std::vector<Marker>& marks) {
  Json levels = Json::array();
  for (std::size_t plus = 0; plus < d.by_plus_count.size(); ++plus) {
    Json orbits = Json::array();
    for (std::size_t k = 0; k < d.by_plus_count[plus].size(); ++k) {
      const auto& o = d.by_plus_count[plus][k];
      Json item{{"representative", to_json(o.representative)},
                {"signs", o.representative_signs.to_string()},
                {"orbit_size", o.orbit_size},
                {"assignment_count", o.assignment_count},
                {"length", o.length}};
      for (const auto& m : marks)
        if (m.plus_count == plus && d.find(plus, m.vector) == k) item["marked"] = m.name;
      orbits.push_back(std::move(item));
    }
    levels.push_back({{"plus_count", plus}, {"orbits", std::move(orbits)}});
  }
  return {{"label", d.label}, {"group", d.rep_name}, {"n", d.n}, {"levels", std::move(levels)}};
}

inline void write_decomposition_text(std::ostream& out, const ClassicalOrbitDecomposition& d,
                                     const std::vector<Marker>& marks) {
  out << d.label << " under " << group_label(d.rep_name) << ": " << d.total_assignments() << " sign assignments\n";
  char head[160];
  std::snprintf(head, sizeof head, "  %-4s %-40s %-8s %-8s %-12s %s\n", "N+", "representative", "size", "count", "length",
                "signs");
  out << head;
  for (std::size_t plus = 0; plus < d.by_plus_count.size(); ++plus)
    for (std::size_t k = 0; k < d.by_plus_count[plus].size(); ++k) {
      const auto& o = d.by_plus_count[plus][k];
      char line[200];
      std::snprintf(line, sizeof line, "  %-4zu %-40s %-8zu %-8llu %-12.6f %s", plus, fmt_vec(o.representative).c_str(),
                    o.orbit_size, static_cast<unsigned long long>(o.assignment_count), o.length,
                    o.representative_signs.to_string().c_str());
      out << line;
      for (const auto& m : marks)
        if (m.plus_count == plus && d.find(plus, m.vector) == k) out << "  <- " << m.name;
      out << "\n";
    }
}

inline void write_decomposition_csv(std::ostream& out, const ClassicalOrbitDecomposition& d,
                                    const std::vector<Marker>& marks) {
  for (std::size_t plus = 0; plus < d.by_plus_count.size(); ++plus)
    for (std::size_t k = 0; k < d.by_plus_count[plus].size(); ++k) {
      const auto& o = d.by_plus_count[plus][k];
      std::string marked;
      for (const auto& m : marks)
        if (m.plus_count == plus && d.find(plus, m.vector) == k) marked = m.name;
      out << d.label << ',' << plus << ',' << fmt("%.17g", o.representative.x) << ',' << fmt("%.17g", o.representative.y)
          << ',' << fmt("%.17g", o.representative.z) << ',' << o.orbit_size << ',' << o.assignment_count << ','
          << fmt("%.17g", o.length) << ',' << o.representative_signs.to_string() << ',' << marked << "\n";
    }
}

inline int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Solid solid = require_solid(cfg.alice);
  const Orbit orbit = canonical_solid(solid);
  std::vector<ClassicalOrbitDecomposition> decomps{classify_classical_vectors(orbit, generating_rep(solid))};
  std::vector<std::vector<Marker>> marks(1);
  std::optional<BoundResult> bound;
  Vec3 v, w;
  if (!cfg.pair.empty()) {
    const Solid other = require_solid(cfg.pair);
    const Orbit partner = canonical_solid(other);
    bound = classical_bound(gram(orbit, partner), cfg.threads);
    v = signed_sum(orbit.vertices, bound->alice_strategy);
    w = signed_sum(partner.vertices, bound->bob_strategy);
    marks[0].push_back({bound->alice_strategy.plus_count(), v, "V"});
    decomps.push_back(classify_classical_vectors(partner, generating_rep(other)));
    marks.push_back({{bound->bob_strategy.plus_count(), w, "W"}, {partner.size() - bound->bob_strategy.plus_count(), -w, "-W"}});
  }

  switch (cfg.format) {
    case Format::Structured: {
      Json doc{{"decompositions", Json::array()}};
      for (std::size_t i = 0; i < decomps.size(); ++i) doc["decompositions"].push_back(decomposition_json(decomps[i], marks[i]));
      if (bound) {
        doc["pair"] = to_json(*bound);
        doc["V"] = to_json(v);
        doc["W"] = to_json(w);
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Delimited:
      out << "solid,plus_count,x,y,z,orbit_size,assignment_count,length,signs,marked\n";
      for (std::size_t i = 0; i < decomps.size(); ++i) write_decomposition_csv(out, decomps[i], marks[i]);
      break;
    case Format::Text:
      for (std::size_t i = 0; i < decomps.size(); ++i) {
        if (i) out << "\n";
        write_decomposition_text(out, decomps[i], marks[i]);
      }
      if (bound) {
        out << "\nmaximizing classical vectors for " << bound->alice_label << " - " << bound->bob_label << ":\n";
        out << "  V = " << fmt_vec(v) << "  |V| = " << fmt("%.6f", norm(v)) << "\n";
        out << "  W = " << fmt_vec(w) << "  |W| = " << fmt("%.6f", norm(w)) << "\n";
        out << "  V.W = " << fmt("%.10g", dot(v, w)) << " = C\n";
      }
      break;
  }
  return kOk;
}

inline Z4InitialVector parse_point(const std::string& text) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad point '" + text + "'");
    }
  }
  if (xs.size() != 3) throw Error(ErrorKind::Parse, "point needs a,b,c: '" + text + "'");
  const double n = norm({xs[0], xs[1], xs[2]});
  if (n == 0.0) throw Error(ErrorKind::NonUnitInitialVector, "zero point");
  return {xs[0] / n, xs[1] / n, xs[2] / n};
}

inline int cmd_z4_scan(const RunConfig& cfg, std::ostream& out) {
  std::vector<Z4InitialVector> pts;
  for (const auto& p : cfg.points) pts.push_back(parse_point(p));
  if (pts.empty()) pts = z4_scan_grid(cfg.polar_steps, cfg.azimuth_steps);

  Json rows = Json::array();
  if (cfg.format != Format::Structured) out << "a,b,c,C_closed_form,C_search,quantum,ratio,violated,note\n";
  for (const auto& p : pts) {
    const Z4ScanRow r = z4_scan_point(p, cfg.threads);
    if (cfg.format == Format::Structured) {
      Json row{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"C_closed_form", round_significant(r.closed_form, 10)}};
      row["C_search"] = r.degenerate ? Json(nullptr) : Json(round_significant(r.search, 10));
      row["quantum"] = round_significant(r.quantum, 10);
      row["ratio"] = round_significant(r.ratio, 10);
      row["violated"] = r.violated;
      row["note"] = r.degenerate ? "DegenerateOrbit" : "";
      rows.push_back(std::move(row));
    } else {
      out << fmt("%.10g", p.a) << ',' << fmt("%.10g", p.b) << ',' << fmt("%.10g", p.c) << ','
          << fmt("%.10g", r.closed_form) << ',' << (r.degenerate ? std::string() : fmt("%.10g", r.search)) << ','
          << fmt("%.10g", r.quantum) << ',' << fmt("%.10g", r.ratio) << ',' << (r.violated ? "true" : "false") << ','
          << (r.degenerate ? "DegenerateOrbit" : "") << "\n";
    }
  }
  if (cfg.format == Format::Structured) out << Json{{"rows", std::move(rows)}}.dump(2) << "\n";
  return kOk;
}

inline int cmd_z4_min(const RunConfig& cfg, std::ostream& out) {
  const Z4Minimum m = z4_minimize_classical();
  const SphereSampleMinimum sample = z4_sample_minimum(cfg.samples);
  const bool sample_ok = sample.value >= m.classical - 1e-12;
  switch (cfg.format) {
    case Format::Structured:
      out << Json{{"minimizer", to_json(m.minimizer.vec())},
                  {"classical_bound", round_significant(m.classical, 10)},
                  {"quantum_value", round_significant(m.quantum, 10)},
                  {"violated", m.violated},
                  {"samples", cfg.samples},
                  {"sample_minimum", round_significant(sample.value, 10)},
                  {"sample_check", sample_ok}}
                 .dump(2)
          << "\n";
      break;
    case Format::Delimited:
      out << "a,b,c,classical_bound,quantum_value,violated,samples,sample_minimum,sample_check\n"
          << fmt("%.10g", m.minimizer.a) << ',' << fmt("%.10g", m.minimizer.b) << ',' << fmt("%.10g", m.minimizer.c) << ','
          << fmt("%.10g", m.classical) << ',' << fmt("%.10g", m.quantum) << ',' << (m.violated ? "true" : "false") << ','
          << cfg.samples << ',' << fmt("%.10g", sample.value) << ',' << (sample_ok ? "true" : "false") << "\n";
      break;
    case Format::Text:
      out << "minimizer (a, b, c) = " << fmt_vec(m.minimizer.vec(), "%.10f") << "\n";
      out << "classical bound C   = " << fmt("%.10f", m.classical) << "  (16/sqrt(15))\n";
      out << "quantum value B     = " << fmt("%.10f", m.quantum) << "\n";
      out << "violated            = " << (m.violated ? "true" : "false") << "\n";
      out << "sphere samples      = " << cfg.samples << ", smallest C " << fmt("%.10f", sample.value)
          << (sample_ok ? " (>= minimum)" : " (BELOW minimum)") << "\n";
      break;
  }
  return sample_ok ? kOk : kFailure;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "solids") return cmd_solids(cfg, out);
  if (cfg.command == "bounds") return cmd_bounds(cfg, out);
  if (cfg.command == "reference") return cmd_reference(cfg, out);
  if (cfg.command == "classify") return cmd_classify(cfg, out);
  if (cfg.command == "z4-scan") return cmd_z4_scan(cfg, out);
  if (cfg.command == "z4-min") return cmd_z4_min(cfg, out);
  return kUsage;
}

/// Parses `args` (without the program name) and runs the command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell inequalities from finite-group orbits", "orbit-bell"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"structured", Format::Structured}, {"delimited", Format::Delimited}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text | structured | delimited")->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.output_path, "write output to this file");
    sub->add_option("--threads", cfg.threads, "search threads (0 = all processors)");
  };

  auto* solids = app.add_subcommand("solids", "list the canonical solids");
  common(solids);

  auto* bounds = app.add_subcommand("bounds", "classical bound and quantum value for a pair");
  bounds->add_option("alice", cfg.alice, "solid name or orbit file")->required();
  bounds->add_option("bob", cfg.bob, "solid name or orbit file")->required();
  common(bounds);

  auto* table = app.add_subcommand("reference", "all reference pairs");
  table->add_flag("--check", cfg.check, "compare against the embedded reference values");
  common(table);

  auto* classify = app.add_subcommand("classify", "orbit decomposition of the classical vectors");
  classify->add_option("solid", cfg.alice, "solid name")->required();
  classify->add_option("--pair", cfg.pair, "mark the maximizing vectors for this partner solid");
  common(classify);

  auto* scan = app.add_subcommand("z4-scan", "Z4 bound scan over Bob's initial vector");
  scan->add_option("--polar", cfg.polar_steps, "polar grid steps");
  scan->add_option("--azimuth", cfg.azimuth_steps, "azimuthal grid steps");
  scan->add_option("--point", cfg.points, "explicit a,b,c (normalized); repeatable");
  common(scan);

  auto* zmin = app.add_subcommand("z4-min", "minimal Z4 classical bound");
  zmin->add_option("--samples", cfg.samples, "sphere samples for the cross-check");
  common(zmin);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = formats.at(format);

  try {
    if (cfg.output_path.empty()) return dispatch(cfg, out);
    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer);
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << cfg.output_path << "\n";
      return kFailure;
    }
    file << buffer.str();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::UnknownSolid:
      case ErrorKind::Parse: return kUsage;
      case ErrorKind::BudgetExceeded: return kBudget;
      default: return kFailure;
    }
  }
}

}  // namespace orbit_bell::cli
