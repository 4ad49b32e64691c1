#pragma once

// Command implementations behind the crossed_ops executable. Each returns the
// process exit code: 0 pass, 1 mathematical violation, 2 usage or IO error.

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "braid.hpp"
#include "crossed.hpp"
#include "embed.hpp"
#include "homology.hpp"
#include "operad.hpp"
#include "operadic.hpp"
#include "report.hpp"

namespace crossed::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OperadKind { none, sym, trivial, braid };

/// A named structure: a finite crossed interval group and/or a group operad.
struct Structure {
  std::string name;
  CrossedPtr crossed;  // null for braid
  OperadKind operad = OperadKind::none;
  bool finite() const { return crossed != nullptr; }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// sym, hyperoctahedral, weyl, refl, trivial, braid, constant:<group-file>, or a W-spec file.
inline Structure resolve_structure(const std::string& spec) {
  if (spec == "sym") return {"sym", symmetric(), OperadKind::sym};
  if (spec == "hyperoctahedral") return {"hyperoctahedral", hyperoctahedral(), OperadKind::none};
  if (spec == "weyl") return {"weyl", weyl(), OperadKind::none};
  if (spec == "refl") return {"refl", refl(), OperadKind::none};
  if (spec == "trivial") return {"trivial", constant(trivial_group(), "trivial"), OperadKind::trivial};
  if (spec == "braid") return {"braid", nullptr, OperadKind::braid};
  try {
    if (spec.rfind("constant:", 0) == 0) {
      const std::string path = spec.substr(9);
      const FiniteGroup q = parse_group(read_file(path));
      const std::string name = "constant(" + std::filesystem::path(path).stem().string() + ")";
      return {name, constant(q, name), OperadKind::none};
    }
    if (std::filesystem::exists(spec)) {
      std::istringstream in(read_file(spec));
      const std::string name = std::filesystem::path(spec).stem().string();
      return {name, parse_wreath_spec(in, name), OperadKind::none};
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown structure '" + spec + "'");
}

inline void check_format(const std::string& format) {
  if (format != "text" && format != "json") throw UsageError("format must be text or json");
}

inline std::string overall_status(const std::vector<Report>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return "fail";
  }
  return "pass";
}

inline void print_reports(std::ostream& out, const std::string& format, nlohmann::json header,
                          const std::vector<Report>& reports) {
  const std::string status = overall_status(reports);
  if (format == "json") {
    header["status"] = status;
    header["reports"] = nlohmann::json::array();
    for (const auto& r : reports) header["reports"].push_back(r.to_json());
    out << header.dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << r.to_text();
    out << "overall: " << status << '\n';
  }
}

struct VerifyOptions {
  std::string structure;
  int max_degree = 3;
  std::vector<std::string> checks;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  std::string format = "text";
};

inline const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names{"axioms",         "inert-action",  "operadic",   "tame",
                                              "dissociated-stabilizer", "group-operad", "unit-structure"};
  return names;
}

namespace detail {

/// Finite degrees above this bound switch to sampling.
inline constexpr int exhaustive_degree_limit = 3;

inline Report over_sym_failure(const std::string& subject, int bound, const std::string& what) {
  Report r(subject, bound);
  r.add("over-sym", {}, {what});
  return r;
}

template <GroupOperad O>
void operad_checks(const O& o, const VerifyOptions& opt, const std::string& check, bool sampled,
                   std::vector<Report>& reports) {
  if (check == "group-operad") {
    if constexpr (SampledOperad<O>) {
      if (sampled) {
        reports.push_back(verify_group_operad_sampled(o, opt.max_degree, opt.max_degree, opt.samples, opt.seed, 3));
        return;
      }
    }
    if constexpr (FiniteOperad<O>) reports.push_back(verify_group_operad(o, opt.max_degree, opt.max_degree));
  } else if (check == "unit-structure") {
    if constexpr (SampledOperad<O>) {
      if (sampled) {
        reports.push_back(unit_structure_checks_sampled(o, opt.max_degree, opt.samples, opt.seed, 3));
        return;
      }
    }
    if constexpr (FiniteOperad<O>) reports.push_back(unit_structure_checks(o, opt.max_degree));
  }
}

}  // namespace detail

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    check_format(opt.format);
    if (opt.max_degree < 0) throw UsageError("max-degree must be non-negative");
    const Structure s = resolve_structure(opt.structure);
    std::vector<std::string> checks = opt.checks;
    if (checks.empty()) {
      checks.push_back("axioms");
      if (s.operad != OperadKind::none) {
        checks.push_back("group-operad");
        checks.push_back("unit-structure");
      }
    }
    for (const auto& c : checks) {
      if (std::find(verify_check_names().begin(), verify_check_names().end(), c) == verify_check_names().end()) {
        throw UsageError("unknown check '" + c + "'");
      }
      if ((c == "group-operad" || c == "unit-structure") && s.operad == OperadKind::none) {
        throw UsageError("check '" + c + "' needs a group operad (sym, trivial or braid)");
      }
      if (!s.finite() && c != "axioms" && c != "group-operad" && c != "unit-structure") {
        throw UsageError("check '" + c + "' needs a finite structure");
      }
    }
    const bool sampled = !s.finite() || opt.max_degree > detail::exhaustive_degree_limit;
    std::vector<Report> reports;
    for (const auto& c : checks) {
      if (c == "axioms") {
        if (!s.finite()) {
          reports.push_back(verify_crossed_axioms_sampled(psi_crossed(braid_operad(), -1), opt.max_degree, opt.samples, opt.seed));
        } else if (sampled) {
          reports.push_back(verify_crossed_axioms_sampled(*s.crossed, opt.max_degree, opt.samples, opt.seed));
        } else {
          reports.push_back(verify_crossed_axioms(*s.crossed, opt.max_degree));
        }
      } else if (c == "inert-action") {
        reports.push_back(inert_trivial_action(*s.crossed, opt.max_degree));
      } else if (c == "operadic") {
        reports.push_back(is_operadic(*s.crossed, opt.max_degree));
      } else if (c == "tame") {
        try {
          reports.push_back(is_tame(*s.crossed, opt.max_degree));
        } catch (const NotOverSymError& e) {
          reports.push_back(detail::over_sym_failure("tame:" + s.name, opt.max_degree, e.what()));
        }
      } else if (c == "dissociated-stabilizer") {
        reports.push_back(check_dissociated_stabilizer(*s.crossed, opt.max_degree, DissociationScope::one_sided_pairs));
      } else if (s.operad == OperadKind::sym) {
        detail::operad_checks(sym_operad(), opt, c, sampled, reports);
      } else if (s.operad == OperadKind::trivial) {
        detail::operad_checks(trivial_operad(), opt, c, sampled, reports);
      } else {
        detail::operad_checks(braid_operad(), opt, c, true, reports);
      }
    }
    for (auto& r : reports) {
      if (r.mode == "sampled" && s.finite()) r.notes.push_back("degree above 3: randomized sampling");
    }
    print_reports(out, opt.format, {{"command", "verify"}, {"structure", s.name}, {"max_degree", opt.max_degree}},
                  reports);
    return overall_status(reports) == "pass" ? exit_pass : exit_violation;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

struct QuotientOptions {
  std::string structure;
  std::string kind = "operadify";
  int max_degree = 3;
  std::string format = "text";
};

inline int cmd_quotient(const QuotientOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    check_format(opt.format);
    if (opt.kind != "operadify" && opt.kind != "tame") throw UsageError("kind must be operadify or tame");
    if (opt.max_degree < 0) throw UsageError("max-degree must be non-negative");
    const Structure s = resolve_structure(opt.structure);
    if (!s.finite()) throw UsageError("structure '" + s.name + "' is infinite; quotients need finite degrees");
    QuotientPtr q;
    const std::string subject = "quotient:" + opt.kind + ":" + s.name;
    try {
      q = opt.kind == "operadify" ? operadify(s.crossed, opt.max_degree) : tame_quotient(s.crossed, opt.max_degree);
    } catch (const NotOverSymError& e) {
      print_reports(out, opt.format, {{"command", "quotient"}, {"structure", s.name}, {"kind", opt.kind}},
                    {detail::over_sym_failure(subject, opt.max_degree, e.what())});
      return exit_violation;
    }
    Report summary(subject, opt.max_degree);
    const auto& fam = q->family();
    std::string gens = "generators per degree:", subs = "subgroup orders:", orders = "quotient orders:";
    for (int n = 0; n <= opt.max_degree; ++n) {
      gens += " " + std::to_string(n) + ":" + std::to_string(fam.generator_counts[static_cast<std::size_t>(n)]);
      subs += " " + std::to_string(n) + ":" + std::to_string(fam.order(n));
      orders += " " + std::to_string(n) + ":" + std::to_string(q->order(n));
    }
    summary.notes = {gens, subs, orders,
                     std::string("generators closed under restriction: ") +
                         (fam.generators_restriction_closed ? "yes" : "no")};
    summary.merge(check_family(*s.crossed, fam));
    summary.mark_truncated();
    std::vector<Report> reports{summary, verify_crossed_axioms(*q, opt.max_degree)};
    if (opt.kind == "operadify") {
      reports.push_back(is_operadic(*q, opt.max_degree));
    } else {
      reports.push_back(is_tame(*q, opt.max_degree));
    }
    nlohmann::json header{{"command", "quotient"}, {"structure", s.name}, {"kind", opt.kind}};
    if (opt.format == "json") {
      header["tables"] = nlohmann::json::array();
      for (int n = 0; n <= opt.max_degree; ++n) {
        const FiniteGroup& g = q->group_at(n);
        nlohmann::json rows = nlohmann::json::array();
        for (FiniteGroup::index a = 0; a < g.order(); ++a) {
          std::vector<FiniteGroup::index> row;
          for (FiniteGroup::index b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
          rows.push_back(row);
        }
        header["tables"].push_back({{"degree", n}, {"order", g.order()}, {"table", rows}});
      }
      print_reports(out, opt.format, header, reports);
    } else {
      print_reports(out, opt.format, header, reports);
      for (int n = 0; n <= opt.max_degree; ++n) out << "degree " << n << '\n' << group_to_text(q->group_at(n));
    }
    return overall_status(reports) == "pass" ? exit_pass : exit_violation;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

struct HochschildOptions {
  std::string algebra;
  int top = 4;
  std::string zmap = "cyclic";
  bool check_oracle = false;
  bool dump_boundaries = false;
  std::string format = "text";
};

inline int cmd_hochschild(const HochschildOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    check_format(opt.format);
    if (opt.zmap != "cyclic") throw UsageError("zmap must be cyclic");
    if (opt.top < 0) throw UsageError("top must be non-negative");
    std::optional<Algebra> alg;
    try {
      alg = parse_algebra_text(read_file(opt.algebra));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    const ChainComplex c = hochschild_complex(*alg, opt.top + 1);
    Report report("hochschild:" + std::filesystem::path(opt.algebra).stem().string(), opt.top);
    report.merge(check_complex(c));
    if (opt.check_oracle) {
      for (int n = 1; n <= opt.top + 1; ++n) {
        ++report.checked;
        if (!(c.boundary(n) == classical_hochschild_boundary(*alg, n))) report.add("oracle-boundary", {n}, {});
      }
    }
    std::vector<std::size_t> dims;
    if (report.passed()) dims = homology_dims(c);
    std::string line;
    for (std::size_t n = 0; n < dims.size(); ++n) line += (n ? " " : "") + std::to_string(n) + ":" + std::to_string(dims[n]);
    if (opt.format == "json") {
      nlohmann::json j{{"command", "hochschild"}, {"algebra", opt.algebra}, {"zmap", opt.zmap},
                       {"homology_dims", dims}, {"status", report.passed() ? "pass" : "fail"},
                       {"report", report.to_json()}};
      if (opt.check_oracle) j["oracle"] = report.passed() ? "match" : "mismatch";
      if (opt.dump_boundaries) {
        j["boundaries"] = nlohmann::json::array();
        for (int n = 1; n <= opt.top + 1; ++n) {
          nlohmann::json entries = nlohmann::json::array();
          const auto& b = c.boundary(n);
          for (std::size_t i = 0; i < b.rows(); ++i) {
            for (const auto& [col, v] : b.row(i)) entries.push_back({i, col, rational_to_string(v)});
          }
          j["boundaries"].push_back({{"degree", n}, {"rows", b.rows()}, {"cols", b.cols()}, {"entries", entries}});
        }
      }
      out << j.dump(2) << '\n';
    } else {
      out << line << '\n';
      if (opt.check_oracle) out << "oracle: " << (report.passed() ? "match" : "mismatch") << '\n';
      if (!report.passed()) out << report.to_text();
      if (opt.dump_boundaries) {
        for (int n = 1; n <= opt.top + 1; ++n) {
          const auto& b = c.boundary(n);
          out << "boundary " << n << " (" << b.rows() << "x" << b.cols() << ")\n";
          for (std::size_t i = 0; i < b.rows(); ++i) {
            for (const auto& [col, v] : b.row(i)) out << "  " << i << " " << col << " " << rational_to_string(v) << '\n';
          }
        }
      }
    }
    return report.passed() ? exit_pass : exit_violation;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

struct MapsOptions {
  std::string source;
  std::string target;
  int max_degree = 3;
  std::string format = "text";
};

inline int cmd_maps(const MapsOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    check_format(opt.format);
    if (opt.max_degree < 0) throw UsageError("max-degree must be non-negative");
    const Structure src = resolve_structure(opt.source);
    const Structure tgt = resolve_structure(opt.target);
    if (!src.finite() || !tgt.finite()) throw UsageError("map enumeration needs finite structures");
    const MapEnumeration maps = enumerate_crossed_maps(*src.crossed, *tgt.crossed, opt.max_degree);
    if (opt.format == "json") {
      nlohmann::json j{{"command", "maps"},          {"source", src.name},         {"target", tgt.name},
                       {"count", maps.families.size()}, {"label", maps.label()}, {"families", maps.families}};
      out << j.dump(2) << '\n';
    } else {
      out << "count " << maps.families.size() << " (" << maps.label() << ")\n";
      for (std::size_t f = 0; f < maps.families.size(); ++f) {
        out << "family " << f << '\n';
        for (std::size_t n = 0; n < maps.families[f].size(); ++n) {
          out << "  degree " << n << ":";
          for (auto v : maps.families[f][n]) out << ' ' << v;
          out << '\n';
        }
      }
    }
    return exit_pass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace crossed::cli
