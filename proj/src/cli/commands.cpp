#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "csdlab/cli.hpp"
#include "csdlab/degrees.hpp"
#include "csdlab/formulas.hpp"
#include "csdlab/group_expr.hpp"
#include "csdlab/groups.hpp"
#include "csdlab/lattice.hpp"
#include "csdlab/number_theory.hpp"
#include "csdlab/parallel.hpp"
#include "json.hpp"

namespace csdlab::cli {

RunReport compute_report(const std::string& group_expr, const ComputeRequest& request,
                         const Limits& limits, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  const FiniteGroup g = group_from_expr(group_expr, limits);
  const CyclicPoset poset = cyclic_subgroups(g, limits);

  RunReport report;
  report.group = group_expr;
  report.order = g.order();
  report.l1_size = poset.size();
  report.csd = csd(g, poset, jobs);
  report.d = d(g, jobs);

  if (request.lattice) {
    const SubgroupLattice lattice = subgroup_lattice(g, limits);
    report.lattice_size = lattice.size();
    report.sd = sd(g, lattice, jobs);
    report.ndeg = Degree(BigInt(normal_subgroups(g, lattice).size()), BigInt(lattice.size()));
    report.cdeg = Degree(BigInt(poset.size()), BigInt(lattice.size()));
    const bool sd_one = *report.sd == Degree::one();
    if (sd_one != (report.csd == Degree::one())) {
      throw InternalError(group_expr + ": csd = 1 and sd = 1 disagree");
    }
    report.is_iwasawa = sd_one;
  }
  if (request.sections) report.csd_star = csd_star(g, limits);
  if (request.timing) {
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  }
  return report;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const std::int64_t lo = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const std::int64_t hi = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad range \"" + text + "\" (expected a..b)");
  }
}

namespace {

struct VerifyCase {
  std::string params;
  std::function<formulas::FormulaResult()> formula;
  std::function<FiniteGroup(const Limits&)> build;
  bool bound_only = false;
  std::int64_t expected_cyclic_count = 0;
};

std::vector<VerifyCase> verify_cases(const std::string& family, std::int64_t lo, std::int64_t hi) {
  std::vector<VerifyCase> cases;
  if (family == "dihedral") {
    for (std::int64_t m = std::max<std::int64_t>(lo, 2); m <= hi; ++m) {
      cases.push_back({"m=" + std::to_string(m), [m] { return formulas::csd_dihedral(m); },
                       [m](const Limits& l) { return dihedral(static_cast<int>(m), l); }});
    }
  } else if (family == "quaternion") {
    for (std::int64_t n = std::max<std::int64_t>(lo, 3); n <= hi; ++n) {
      cases.push_back({"n=" + std::to_string(n), [n] { return formulas::csd_quaternion(n); },
                       [n](const Limits& l) { return generalized_quaternion(static_cast<int>(n), l); }});
    }
  } else if (family == "semidihedral") {
    for (std::int64_t n = std::max<std::int64_t>(lo, 4); n <= hi; ++n) {
      cases.push_back({"n=" + std::to_string(n), [n] { return formulas::csd_semidihedral(n); },
                       [n](const Limits& l) { return quasidihedral(static_cast<int>(n), l); }});
    }
  } else if (family == "pgroup") {
    // every (n, p, q) with p^{n-1} q in [lo, hi], ordered by (order, p, q, n)
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> params;
    for (std::int64_t p = 3; 2 * p <= hi; ++p) {
      if (!nt::is_prime(p)) continue;
      for (std::int64_t q : nt::prime_divisors(p - 1)) {
        std::int64_t base = p * q;
        for (std::int64_t n = 2; base <= hi; ++n, base *= p) {
          if (base >= lo) params.emplace_back(base, p, q, n);
        }
      }
    }
    std::sort(params.begin(), params.end());
    for (const auto& [order, p, q, n] : params) {
      cases.push_back({"n=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q),
                       [n = n, p = p] { return formulas::csd_P_group(n, p); },
                       [n = n, p = p, q = q](const Limits& l) {
                         return p_group_P(static_cast<int>(n), static_cast<int>(p), static_cast<int>(q), l);
                       }});
    }
  } else if (family == "ep3") {
    for (std::int64_t p = std::max<std::int64_t>(lo, 3); p <= hi; ++p) {
      if (!nt::is_prime(p)) continue;
      cases.push_back({"p=" + std::to_string(p), [p] { return formulas::csd_E_p3(p); },
                       [p](const Limits& l) { return heisenberg_E(static_cast<int>(p), l); }});
    }
  } else if (family == "zq8bound") {
    for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n) {
      VerifyCase c{"n=" + std::to_string(n), [n] { return formulas::csd_lower_bound_Zn_Q8(n).bound; },
                   [n](const Limits& l) {
                     if (n > 30) throw GuardrailError("max-order", l.max_order, std::size_t(-1));
                     return direct_product(cyclic(1 << n, l), generalized_quaternion(3, l), l);
                   }};
      c.bound_only = true;
      c.expected_cyclic_count = 8 * n + 2;
      cases.push_back(std::move(c));
    }
  } else {
    throw InvalidArgument("unknown verify family \"" + family +
                          "\" (dihedral, quaternion, semidihedral, pgroup, ep3, zq8bound)");
  }
  return cases;
}

}  // namespace

std::vector<VerifyRow> run_verify(const std::string& family, std::int64_t lo, std::int64_t hi,
                                  const Limits& limits, unsigned jobs) {
  const auto cases = verify_cases(family, lo, hi);
  std::vector<VerifyRow> rows(cases.size());
  parallel_for(cases.size(), jobs, [&](std::size_t, std::size_t i) {
    const auto& c = cases[i];
    VerifyRow row;
    row.params = c.params;
    const auto formula = c.formula();
    row.formula = formula.value.to_string();
    try {
      const FiniteGroup g = c.build(limits);
      const CyclicPoset poset = cyclic_subgroups(g, limits);
      const Degree brute = csd(g, poset);
      row.brute = brute.to_string();
      bool ok = c.bound_only ? brute >= formula.value : brute == formula.value;
      if (c.bound_only) ok = ok && static_cast<std::int64_t>(poset.size()) == c.expected_cyclic_count;
      row.status = ok ? VerifyRow::Status::match : VerifyRow::Status::mismatch;
    } catch (const GuardrailError&) {
      row.status = VerifyRow::Status::skipped;
    }
    rows[i] = std::move(row);
  });
  return rows;
}

Table verify_table(const std::vector<VerifyRow>& rows) {
  Table table{{"params", "formula", "brute", "match"}, {}};
  for (const auto& r : rows) {
    const char* status = r.status == VerifyRow::Status::match      ? "match"
                         : r.status == VerifyRow::Status::mismatch ? "MISMATCH"
                                                                   : "skipped";
    table.rows.push_back({r.params, r.formula, r.brute ? Cell(*r.brute) : Cell(std::monostate{}),
                          std::string(status)});
  }
  return table;
}

namespace {

struct GlobalOptions {
  std::string format = "text";
  bool decimal = false;
  unsigned jobs = 1;
  Limits limits;

  OutputOptions output() const {
    OutputOptions o;
    o.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    o.decimal = decimal;
    return o;
  }
};

int exit_code_for(const std::exception_ptr& error, std::ostream& err) {
  try {
    std::rethrow_exception(error);
  } catch (const GuardrailError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuardrail;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

// Runs fn(index, expr) for every group expression on the worker pool; results
// keep input order. Failures are reported per group and the worst exit code returned.
template <typename Result, typename Fn>
int for_each_group(const std::vector<std::string>& groups, unsigned jobs, std::ostream& err,
                   std::vector<std::optional<Result>>& results, Fn&& fn) {
  results.assign(groups.size(), std::nullopt);
  std::vector<std::exception_ptr> errors(groups.size());
  parallel_for(groups.size(), jobs, [&](std::size_t, std::size_t i) {
    try {
      results[i] = fn(i, groups[i]);
    } catch (const InternalError&) {
      throw;
    } catch (const Error&) {
      errors[i] = std::current_exception();
    }
  });
  int code = kExitOk;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (!errors[i]) continue;
    err << groups[i] << ": ";
    code = std::max(code, exit_code_for(errors[i], err));
  }
  return code;
}

std::vector<std::string> expand_family(const std::string& family, const std::string& range) {
  if (family.empty()) return {};
  const auto [lo, hi] = parse_range(range);
  std::vector<std::string> out;
  for (std::int64_t k = lo; k <= hi; ++k) out.push_back(family + "(" + std::to_string(k) + ")");
  return out;
}

std::string read_all(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open batch file \"" + path + "\"");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct BatchItem {
  std::string group;
  ComputeRequest request;
};

std::vector<BatchItem> parse_batch(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("batch input is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InvalidArgument("batch input must be a JSON array");
  std::vector<BatchItem> items;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("group") || !entry["group"].is_string()) {
      throw InvalidArgument("batch entries need a string field \"group\"");
    }
    BatchItem item{entry["group"].get<std::string>(), {}};
    if (entry.contains("ops")) {
      for (const auto& op : entry["ops"]) {
        const std::string name = op.is_string() ? op.get<std::string>() : "";
        if (name == "csd" || name == "d") {
        } else if (name == "sd" || name == "ndeg" || name == "cdeg" || name == "is_iwasawa") {
          item.request.lattice = true;
        } else if (name == "csd_star") {
          item.request.sections = true;
        } else if (name == "all") {
          item.request.lattice = item.request.sections = true;
        } else {
          throw InvalidArgument("unknown batch op \"" + name + "\"");
        }
      }
    }
    items.push_back(std::move(item));
  }
  return items;
}

std::string classify_csd_star(const Degree& value) {
  if (value > formulas::iwasawa_threshold()) return "iwasawa-certified";
  if (value == formulas::iwasawa_threshold()) return "threshold-41/49";
  if (value > formulas::nilpotent_threshold()) return "nilpotent-certified";
  return "not-certified";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cyclic subgroup commutativity degrees of finite groups", "csdlab"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_flag("--decimal", global.decimal, "Print degrees as 6-significant-digit decimals");
  app.add_option("--jobs", global.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--max-order", global.limits.max_order, "Largest group order accepted")
      ->envname("CSDLAB_MAX_ORDER");
  app.add_option("--max-lattice-order", global.limits.max_lattice_order,
                 "Largest order for full subgroup lattices");
  app.add_option("--max-sections-order", global.limits.max_sections_order,
                 "Largest order for section enumeration");

  // compute
  auto* compute = app.add_subcommand("compute", "Compute degrees for group expressions");
  std::vector<std::string> compute_groups;
  std::string batch_path;
  bool want_all = false, csd_only = false, want_sections = false, timing = false;
  compute->add_option("--group,-g", compute_groups, "Group expression, e.g. \"S(3)xZ(3)\"");
  compute->add_option("--batch", batch_path, "JSON array of {group, ops}; '-' reads standard input");
  compute->add_flag("--all", want_all, "Also compute |L|, sd, ndeg, cdeg, is_iwasawa");
  compute->add_flag("--csd-only", csd_only, "Only csd and d");
  compute->add_flag("--sections", want_sections, "Also compute csd* over all sections");
  compute->add_flag("--timing", timing, "Record wall time per group");

  // verify
  auto* verify = app.add_subcommand("verify", "Compare closed-form formulas with enumeration");
  std::string verify_family, verify_range;
  verify->add_option("family", verify_family, "dihedral|quaternion|semidihedral|pgroup|ep3|zq8bound")
      ->required();
  verify->add_option("range", verify_range, "Parameter range a..b")->required();

  // scan
  auto* scan = app.add_subcommand("scan", "Search a corpus of groups");
  std::string scan_mode, scan_family, scan_range;
  std::vector<std::string> scan_groups;
  scan->add_option("mode", scan_mode, "csd-eq-sd|monotonicity|csd-star")
      ->required()
      ->check(CLI::IsMember({"csd-eq-sd", "monotonicity", "csd-star"}));
  scan->add_option("--group,-g", scan_groups, "Group expression (repeatable)");
  scan->add_option("--family", scan_family, "Family name expanded over --range, e.g. D");
  scan->add_option("--range", scan_range, "Range for --family, e.g. 4..40")->default_val("1..1");

  // lattice
  auto* lattice_cmd = app.add_subcommand("lattice", "Dump subgroups");
  std::string lattice_group;
  bool lattice_cyclic = false, lattice_normal = false;
  lattice_cmd->add_option("--group,-g", lattice_group, "Group expression")->required();
  lattice_cmd->add_flag("--cyclic", lattice_cyclic, "Only cyclic subgroups");
  lattice_cmd->add_flag("--normal", lattice_normal, "Only normal subgroups");

  // sections
  auto* sections_cmd = app.add_subcommand("sections", "List sections H/N with their csd");
  std::string sections_group;
  sections_cmd->add_option("--group,-g", sections_group, "Group expression")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const OutputOptions output = global.output();
  try {
    if (compute->parsed()) {
      std::vector<BatchItem> items;
      for (const auto& g : compute_groups) {
        items.push_back({g, ComputeRequest{want_all && !csd_only, want_sections && !csd_only, timing}});
      }
      if (!batch_path.empty()) {
        for (auto& item : parse_batch(read_all(batch_path))) {
          item.request.timing = timing;
          items.push_back(std::move(item));
        }
      }
      if (items.empty()) {
        err << "error: compute needs --group or --batch\n";
        return kExitUsage;
      }
      std::vector<std::string> names;
      for (const auto& item : items) names.push_back(item.group);
      // Single groups parallelize inside the computation; batches across groups.
      const unsigned inner_jobs = items.size() == 1 ? global.jobs : 1;
      const unsigned outer_jobs = items.size() == 1 ? 1 : global.jobs;
      std::vector<std::optional<RunReport>> results;
      const int code = for_each_group<RunReport>(
          names, outer_jobs, err, results, [&](std::size_t i, const std::string& g) {
            return compute_report(g, items[i].request, global.limits, inner_jobs);
          });
      std::vector<RunReport> reports;
      for (auto& r : results) {
        if (r) reports.push_back(std::move(*r));
      }
      out << emit(reports, output);
      return code;
    }

    if (verify->parsed()) {
      const auto [lo, hi] = parse_range(verify_range);
      const auto rows = run_verify(verify_family, lo, hi, global.limits, global.jobs);
      out << emit(verify_table(rows), output.format);
      for (const auto& r : rows) {
        if (r.status == VerifyRow::Status::mismatch) return kExitMismatch;
      }
      return kExitOk;
    }

    if (scan->parsed()) {
      std::vector<std::string> groups = scan_groups;
      for (auto& g : expand_family(scan_family, scan_range)) groups.push_back(std::move(g));
      if (groups.empty()) {
        err << "error: scan needs --group or --family\n";
        return kExitUsage;
      }
      Table table;
      int code = kExitOk;
      if (scan_mode == "csd-eq-sd") {
        table.columns = {"group", "order", "csd", "sd"};
        std::vector<std::optional<std::vector<Cell>>> rows;
        code = for_each_group<std::vector<Cell>>(groups, global.jobs, err, rows, [&](std::size_t, const std::string& expr) {
          const FiniteGroup g = group_from_expr(expr, global.limits);
          const Degree c = csd(g, global.limits);
          const Degree s = sd(g, global.limits);
          if (c == s && c != Degree::one()) {
            return std::vector<Cell>{expr, static_cast<std::int64_t>(g.order()), render_degree(c, output),
                                     render_degree(s, output)};
          }
          return std::vector<Cell>{};
        });
        for (auto& r : rows) {
          if (r && !r->empty()) table.rows.push_back(std::move(*r));
        }
      } else if (scan_mode == "monotonicity") {
        table.columns = {"group", "h_index", "h_order", "k_index", "k_order", "csd_h", "csd_k"};
        std::vector<std::optional<std::vector<std::vector<Cell>>>> blocks;
        code = for_each_group<std::vector<std::vector<Cell>>>(
            groups, global.jobs, err, blocks, [&](std::size_t, const std::string& expr) {
              const FiniteGroup g = group_from_expr(expr, global.limits);
              const auto lattice = subgroup_lattice(g, global.limits);
              std::vector<Degree> values;
              for (const auto& h : lattice.subgroups) values.push_back(csd(subgroup_as_group(g, h), global.limits));
              std::vector<std::vector<Cell>> found;
              for (std::size_t i = 0; i < lattice.size(); ++i) {
                for (std::size_t j = 0; j < lattice.size(); ++j) {
                  const auto& h = lattice.subgroups[i];
                  const auto& k = lattice.subgroups[j];
                  if (i == j || !h.members().is_subset_of(k.members())) continue;
                  if (values[i] < values[j]) {
                    found.push_back({expr, static_cast<std::int64_t>(i), static_cast<std::int64_t>(h.size()),
                                     static_cast<std::int64_t>(j), static_cast<std::int64_t>(k.size()),
                                     render_degree(values[i], output), render_degree(values[j], output)});
                  }
                }
              }
              return found;
            });
        for (auto& b : blocks) {
          if (!b) continue;
          for (auto& r : *b) table.rows.push_back(std::move(r));
        }
      } else {
        table.columns = {"group", "order", "csd", "csd_star", "class"};
        std::vector<std::optional<std::vector<Cell>>> rows;
        code = for_each_group<std::vector<Cell>>(groups, global.jobs, err, rows, [&](std::size_t, const std::string& expr) {
          const FiniteGroup g = group_from_expr(expr, global.limits);
          const Degree star = csd_star(g, global.limits);
          return std::vector<Cell>{expr, static_cast<std::int64_t>(g.order()),
                                   render_degree(csd(g, global.limits), output), render_degree(star, output),
                                   classify_csd_star(star)};
        });
        for (auto& r : rows) {
          if (r) table.rows.push_back(std::move(*r));
        }
      }
      out << emit(table, output.format);
      return code;
    }

    if (lattice_cmd->parsed()) {
      const FiniteGroup g = group_from_expr(lattice_group, global.limits);
      std::vector<Subgroup> subs;
      if (lattice_cyclic) {
        subs = cyclic_subgroups(g, global.limits).subgroups;
      } else {
        const auto lattice = subgroup_lattice(g, global.limits);
        subs = lattice_normal ? normal_subgroups(g, lattice) : lattice.subgroups;
      }
      if (output.format == Format::text) {
        for (const auto& s : subs) {
          out << "size=" << s.size() << " members=";
          bool first = true;
          s.members().for_each([&](Elem e) {
            out << (first ? "" : ",") << e;
            first = false;
          });
          out << '\n';
        }
      } else {
        Table table{{"size", "members"}, {}};
        for (const auto& s : subs) {
          std::string members;
          s.members().for_each([&](Elem e) { members += (members.empty() ? "" : ",") + std::to_string(e); });
          table.rows.push_back({static_cast<std::int64_t>(s.size()), members});
        }
        out << emit(table, output.format);
      }
      return kExitOk;
    }

    if (sections_cmd->parsed()) {
      const FiniteGroup g = group_from_expr(sections_group, global.limits);
      check_sections_order(g.order(), global.limits);
      const auto lattice = subgroup_lattice(g, global.limits);
      Table table{{"h_index", "h_order", "n_index", "n_order", "order", "csd"}, {}};
      Degree best = Degree::one();
      for_each_section(g, lattice, [&](const Section& s) {
        const Degree value = csd(s.group, global.limits);
        if (value < best) best = value;
        table.rows.push_back({static_cast<std::int64_t>(s.subgroup_index),
                              static_cast<std::int64_t>(lattice.subgroups[s.subgroup_index].size()),
                              static_cast<std::int64_t>(s.normal_index),
                              static_cast<std::int64_t>(lattice.subgroups[s.normal_index].size()),
                              static_cast<std::int64_t>(s.group.order()), render_degree(value, output)});
        return true;
      });
      out << emit(table, output.format);
      if (output.format == Format::text) out << "csd_star=" << render_degree(best, output) << '\n';
      return kExitOk;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const Error&) {
    return exit_code_for(std::current_exception(), err);
  }
  return kExitUsage;
}

}  // namespace csdlab::cli
