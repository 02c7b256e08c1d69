#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "errata.hpp"
#include "symcensus/errors.hpp"
#include "symcensus/flags.hpp"
#include "symcensus/invverify.hpp"
#include "symcensus/lieverify.hpp"
#include "symcensus/pairs.hpp"
#include "symcensus/partitions.hpp"
#include "symcensus/special.hpp"
#include "symcensus/version.hpp"

namespace symcensus::cli {

namespace {

using json = nlohmann::json;

constexpr int kMaxListed = 1'000'000;

struct Options {
  bool json_output = false;
  std::string output_file;

  int n = 0;
  std::vector<int> parts;
  std::vector<int> parts2;
  int min_part = 1;
  bool distinct = false;
  double tol = lieverify::kDefaultTol;
  double rank_tol = lieverify::kDefaultRankTol;
  bool matrices = false;
  int degree = 4;
  std::string delta;
  int table_max = 10;
  int plist_max = 49;
};

struct Invocation {
  json inputs = json::object();
  json result;
  std::vector<Erratum> errata;
  std::string text;
  int exit_code = kOk;
};

// ---- serialization helpers -------------------------------------------------

json to_json(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

json to_json(const Erratum& e) {
  return {{"source", e.source}, {"n", e.n}, {"column", e.column},
          {"printed", e.printed}, {"computed", e.computed}};
}

json to_json(const flags::InvolutionSpec& inv) {
  return {{"block_a", inv.block_a}, {"block_b", inv.block_b}, {"block_size", inv.block_size}};
}

json to_json(const flags::MultiplicityProfile& prof) {
  json psi = json::object();
  for (const auto& [v, m] : prof.psi) psi[std::to_string(v)] = m;
  return {{"n", prof.n}, {"psi", psi}};
}

json to_json(const pairs::Segment& s) {
  return {{"kind", pairs::to_string(s.kind)}, {"start", s.start},   {"size", s.size},
          {"h_parts", s.h_parts},             {"k_parts", s.k_parts},
          {"h_first_block", s.h_first_block}, {"k_first_block", s.k_first_block}};
}

json to_json(const pairs::WindowPlan& plan) {
  return {{"window", to_json(plan.window)}, {"side", plan.side},
          {"involution", to_json(plan.involution)}};
}

json to_json(const std::vector<invverify::SignedInvolution>& gens) {
  json arr = json::array();
  for (const auto& g : gens) {
    json j = to_json(g.involution);
    j["sign"] = g.sign;
    arr.push_back(j);
  }
  return arr;
}

std::string parts_text(const std::vector<int>& parts) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << '}';
  return os.str();
}

// ---- commands ---------------------------------------------------------------

Invocation cmd_count(const Options& o) {
  Invocation inv;
  inv.inputs = {{"n", o.n}};
  const auto c = partitions::counts(o.n);
  inv.result = {{"p", c.p.str()},         {"q", c.q.str()},         {"r", c.r.str()},
                {"p_ge2", c.p_ge2.str()}, {"q_ge2", c.q_ge2.str()}, {"r_ge2", c.r_ge2.str()}};
  inv.errata = table_errata(o.n, o.n);
  for (auto& e : plist_errata(o.n, o.n)) inv.errata.push_back(std::move(e));
  std::ostringstream os;
  os << "N = " << o.n << "\n"
     << "P(N)   = " << c.p << "\nQ(N)   = " << c.q << "\nR(N)   = " << c.r << "\n"
     << "P(N;1) = " << c.p_ge2 << "\nQ(N;1) = " << c.q_ge2 << "\nR(N;1) = " << c.r_ge2 << "\n";
  inv.text = os.str();
  return inv;
}

Invocation cmd_list(const Options& o) {
  Invocation inv;
  inv.inputs = {{"n", o.n}, {"min_part", o.min_part}, {"distinct", o.distinct}};
  if (o.n < 1) throw DomainError("list: n must be >= 1");
  if (o.min_part < 1) throw DomainError("list: --min-part must be >= 1");
  if (partitions::count_p(o.n) > kMaxListed) {
    throw DomainError("list: more than " + std::to_string(kMaxListed) + " partitions of " +
                      std::to_string(o.n));
  }
  const auto list = partitions::enumerate(o.n, o.min_part, o.distinct);
  json arr = json::array();
  std::ostringstream os;
  for (const auto& p : list) {
    arr.push_back(to_json(p));
    os << p.to_string() << "\n";
  }
  os << list.size() << " partition(s)\n";
  inv.result = {{"count", list.size()}, {"partitions", arr}};
  inv.text = os.str();
  return inv;
}

Invocation cmd_weyl(const Options& o) {
  Invocation inv;
  const Partition p(o.parts);
  inv.inputs = {{"partition", to_json(p)}};
  const auto w = flags::weyl(p);
  json factors = json::array();
  json invs = json::array();
  std::ostringstream os;
  os << "partition " << p.to_string() << "\nW = ";
  bool first = true;
  for (const auto& f : w.factors) {
    factors.push_back({{"part", f.part_value}, {"multiplicity", f.multiplicity}});
    if (f.multiplicity >= 2) {
      os << (first ? "" : " x ") << "S(" << f.multiplicity << ") on blocks of size "
         << f.part_value;
      first = false;
    }
  }
  if (first) os << "trivial";
  os << "\norder " << w.order << "\n";
  for (const auto& i : w.involutions) {
    invs.push_back(to_json(i));
    os << "involution: swap blocks " << i.block_a << " and " << i.block_b << " (size "
       << i.block_size << ")\n";
  }
  inv.result = {{"partition", to_json(p)}, {"factors", factors},  {"order", w.order.str()},
                {"nontrivial", w.nontrivial}, {"involutions", invs}};
  inv.text = os.str();
  return inv;
}

Invocation cmd_equiv(const Options& o) {
  Invocation inv;
  const Partition p1(o.parts), p2(o.parts2);
  inv.inputs = {{"p1", to_json(p1)}, {"p2", to_json(p2)}};
  const bool eq = flags::equivalent(p1, p2);
  inv.result = {{"equivalent", eq},
                {"profile1", to_json(flags::profile(p1))},
                {"profile2", to_json(flags::profile(p2))}};
  inv.text = p1.to_string() + (eq ? " ~ " : " !~ ") + p2.to_string() + "\n";
  return inv;
}

Invocation cmd_orbit(const Options& o) {
  Invocation inv;
  const Partition p(o.parts);
  inv.inputs = {{"partition", to_json(p)}};
  const auto len = flags::orbit_length(p);
  inv.result = {{"orbit_length", len.str()}, {"profile", to_json(flags::profile(p))}};
  inv.text = "orbit length of " + p.to_string() + ": " + len.str() + "\n";
  return inv;
}

Invocation cmd_census(const Options& o) {
  Invocation inv;
  inv.inputs = {{"n", o.n}};
  const auto c = flags::class_census(o.n);
  inv.result = {{"total", c.total.str()},
                {"trivial_weyl", c.trivial_weyl.str()},
                {"nontrivial_weyl", c.nontrivial_weyl.str()},
                {"total_ge2", c.total_ge2.str()},
                {"trivial_weyl_ge2", c.trivial_weyl_ge2.str()},
                {"nontrivial_weyl_ge2", c.nontrivial_weyl_ge2.str()}};
  inv.errata = table_errata(o.n, o.n);
  std::ostringstream os;
  os << "flag classes in R^" << o.n << ": " << c.total << " (trivial Weyl " << c.trivial_weyl
     << ", nontrivial " << c.nontrivial_weyl << ")\n"
     << "with all blocks >= 2: " << c.total_ge2 << " (trivial Weyl " << c.trivial_weyl_ge2
     << ", nontrivial " << c.nontrivial_weyl_ge2 << ")\n";
  inv.text = os.str();
  return inv;
}

Invocation cmd_special(const Options& o) {
  Invocation inv;
  inv.inputs = {{"n", o.n}};
  const auto fam = special::family(o.n);
  json members = json::array();
  std::ostringstream os;
  os << "n = " << o.n << ", case " << special::to_string(fam.kind) << ", M = " << fam.m
     << ", s_N = " << fam.members.size() << "\n";
  for (const auto& m : fam.members) {
    members.push_back(to_json(m));
    os << m.to_string() << "\n";
  }
  inv.result = {{"n", o.n},
                {"case", special::to_string(fam.kind)},
                {"m", fam.m},
                {"s_n", std::to_string(fam.members.size())},
                {"members", members}};
  inv.text = os.str();
  return inv;
}

Invocation cmd_solutions(const Options& o) {
  Invocation inv;
  inv.inputs = {{"n", o.n}};
  const auto s = special::solutions_count(o.n);
  inv.result = {{"s_n", s.str()}};
  inv.text = s.str() + "\n";
  return inv;
}

Invocation cmd_pair(const Options& o) {
  Invocation inv;
  const Partition p1(o.parts), p2(o.parts2);
  inv.inputs = {{"p1", to_json(p1)}, {"p2", to_json(p2)}};
  const auto common = pairs::has_common_subpartition(p1, p2);
  const auto d = pairs::decompose(p1, p2);
  const auto g = pairs::generated_group(p1, p2);
  const bool transitive = pairs::is_transitive_pair(p1, p2);
  std::optional<pairs::WindowPlan> plan;
  if (p1 != p2) plan = pairs::first_window_with_involution(p1, p2);

  json segments = json::array();
  std::ostringstream os;
  os << p1.to_string() << " vs " << p2.to_string() << " in R^" << p1.n() << "\n";
  for (const auto& s : d.segments) {
    segments.push_back(to_json(s));
    os << "  " << pairs::to_string(s.kind) << " [" << s.start << "," << s.end() << ")  H "
       << parts_text(s.h_parts) << "  K " << parts_text(s.k_parts) << "\n";
  }
  json factors = json::array();
  os << "<H,K> = ";
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    factors.push_back({{"size", g.factors[i].size}, {"origin", pairs::to_string(g.factors[i].origin)}});
    os << (i ? " x " : "") << "O(" << g.factors[i].size << ")";
  }
  os << "  (dim " << g.lie_dimension << ")\n"
     << "transitive on the unit sphere: " << (transitive ? "yes" : "no") << "\n";
  if (common) os << "common sub-partition: " << *common << "\n";
  if (plan) {
    os << "window with involution: [" << plan->window.start << "," << plan->window.end()
       << "), side " << plan->side << ", swap blocks " << plan->involution.block_a << " and "
       << plan->involution.block_b << "\n";
  } else {
    os << "no window carries a pair of equal blocks\n";
  }
  inv.result = {{"common_subpartition", common ? json(*common) : json(nullptr)},
                {"segments", segments},
                {"group", {{"factors", factors}, {"lie_dimension", g.lie_dimension}}},
                {"transitive", transitive},
                {"window_plan", plan ? to_json(*plan) : json(nullptr)}};
  inv.text = os.str();
  return inv;
}

Invocation cmd_verify_lie(const Options& o) {
  Invocation inv;
  const Partition p1(o.parts), p2(o.parts2);
  inv.inputs = {{"p1", to_json(p1)}, {"p2", to_json(p2)}, {"tol", o.tol}, {"rank_tol", o.rank_tol}};
  const auto c = lieverify::closure(lieverify::block_algebra(p1), lieverify::block_algebra(p2), o.tol);
  const auto g = pairs::generated_group(p1, p2);
  const bool full = lieverify::transitive_on(c, {0, p1.n()}, o.rank_tol);
  const bool predicted = pairs::is_transitive_pair(p1, p2);

  json windows = json::array();
  bool windows_ok = true;
  std::ostringstream os;
  os << "closure dimension " << c.dimension << " (predicted " << g.lie_dimension << ")\n"
     << "transitive on S^" << p1.n() - 1 << ": " << (full ? "yes" : "no") << " (predicted "
     << (predicted ? "yes" : "no") << ")\n";
  for (const auto& w : pairs::decompose(p1, p2).windows()) {
    const bool t = lieverify::transitive_on(c, {w.start, w.end()}, o.rank_tol);
    windows_ok = windows_ok && t;
    windows.push_back({{"start", w.start}, {"end", w.end()}, {"transitive", t}});
    os << "window [" << w.start << "," << w.end() << "): " << (t ? "transitive" : "NOT transitive")
       << "\n";
  }
  const bool consistent = c.dimension == g.lie_dimension && full == predicted && windows_ok;
  os << (consistent ? "consistent" : "INCONSISTENT") << "\n";
  inv.result = {{"closure_dimension", c.dimension},
                {"predicted_lie_dimension", g.lie_dimension},
                {"iterations", c.iterations},
                {"transitive_full", full},
                {"is_transitive_pair", predicted},
                {"windows", windows},
                {"consistent", consistent}};
  if (o.matrices) {
    json basis = json::array();
    for (const auto& x : c.basis.elements) {
      json rows = json::array();
      for (Eigen::Index i = 0; i < x.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < x.cols(); ++j) row.push_back(x(i, j));
        rows.push_back(row);
      }
      basis.push_back(rows);
    }
    inv.result["basis"] = basis;
  }
  inv.text = os.str();
  inv.exit_code = consistent ? kOk : kDomainError;
  return inv;
}

Invocation cmd_verify_inv(const Options& o) {
  Invocation inv;
  const Partition p1(o.parts), p2(o.parts2);
  inv.inputs = {{"p1", to_json(p1)}, {"p2", to_json(p2)}, {"degree", o.degree}};
  const auto rep = invverify::verify_pair(p1, p2, o.degree);
  inv.result = {{"passed", rep.passed},
                {"window_plan", to_json(rep.plan)},
                {"generators1", to_json(rep.generators1)},
                {"generators2", to_json(rep.generators2)},
                {"dim1", rep.dim1},
                {"dim2", rep.dim2},
                {"intersection", rep.intersection},
                {"control_dim1", rep.control_dim1},
                {"control_dim2", rep.control_dim2},
                {"control_intersection", rep.control_intersection},
                {"residual1", rep.residual1},
                {"residual2", rep.residual2}};
  std::ostringstream os;
  os << "degree <= " << o.degree << ": dim E1 = " << rep.dim1 << ", dim E2 = " << rep.dim2
     << ", dim(E1 & E2) = " << rep.intersection << "\n"
     << "trivial-rho control: " << rep.control_dim1 << ", " << rep.control_dim2
     << ", intersection " << rep.control_intersection << "\n"
     << (rep.passed ? "PASS" : "FAIL (counterexample report above)") << "\n";
  inv.text = os.str();
  inv.exit_code = rep.passed ? kOk : kDomainError;
  return inv;
}

Invocation cmd_nodal(const Options& o) {
  Invocation inv;
  const Partition p(o.parts);
  flags::SignRep rho;
  for (char ch : o.delta) {
    if (ch == ',' || ch == ' ') continue;
    if (ch != '0' && ch != '1') throw DomainError("--delta must be a string of 0/1 digits");
    rho.deltas.push_back(ch - '0');
  }
  inv.inputs = {{"partition", to_json(p)}, {"delta", rho.deltas}};
  const auto subs = flags::nodal_subspaces(p, rho);
  json arr = json::array();
  std::ostringstream os;
  for (const auto& s : subs) {
    arr.push_back({{"block_a", s.block_a}, {"block_b", s.block_b}, {"codimension", s.codimension}});
    os << "x|block " << s.block_a << " == x|block " << s.block_b << "  (codimension "
       << s.codimension << ")\n";
  }
  if (subs.empty()) os << "no forced nodal subspaces (all deltas zero)\n";
  inv.result = {{"subspaces", arr}};
  inv.text = os.str();
  return inv;
}

Invocation cmd_classify(const Options& o) {
  Invocation inv;
  inv.inputs = {{"n", o.n}};
  json arr = json::array();
  std::ostringstream os;
  for (const auto& bp : flags::borel_classification(o.n)) {
    arr.push_back({{"group", bp.group}, {"stabilizer", bp.stabilizer}});
    os << "(" << bp.group << ", " << bp.stabilizer << ")\n";
  }
  inv.result = {{"pairs", arr}};
  inv.text = os.str();
  return inv;
}

Invocation cmd_table(const Options& o) {
  Invocation inv;
  const int max_n = o.table_max;
  inv.inputs = {{"max", max_n}};
  if (max_n < 1 || max_n > 1000) throw DomainError("table: --max must be in [1, 1000]");
  const auto p = partitions::p_table(max_n);
  const auto q = partitions::q_table(max_n);
  const auto q2 = partitions::distinct_min_part_table(max_n, 2);
  inv.errata = table_errata(1, max_n);

  json rows = json::array();
  std::ostringstream os;
  os << std::setw(5) << "N" << std::setw(12) << "P" << std::setw(12) << "Q" << std::setw(12)
     << "R" << std::setw(12) << "P(;1)" << std::setw(12) << "Q(;1)" << std::setw(12) << "R(;1)"
     << "\n";
  for (int n = 1; n <= max_n; ++n) {
    const BigInt pg = n >= 2 ? BigInt(p[n] - p[n - 1]) : BigInt(0);
    const BigInt qg = n >= 2 ? q2[n] : BigInt(0);
    const BigInt rg = pg - qg;
    if (n >= 2) {
      // Alternating recurrence Q(n;1) = Q(n) - Q(n-1;1) must match the direct count.
      const BigInt prev = n >= 3 ? q2[n - 1] : BigInt(0);
      if (q[n] - prev != qg) throw InconsistencyError("table: Q(;1) recurrence mismatch");
    }
    json marked = json::array();
    for (const auto& e : inv.errata) {
      if (e.n == n) marked.push_back(e.column);
    }
    auto cell = [&](const BigInt& v, const char* col) {
      std::string s = v.str();
      if (std::find(marked.begin(), marked.end(), col) != marked.end()) s += "*";
      return s;
    };
    rows.push_back({{"n", n},           {"p", p[n].str()}, {"q", q[n].str()},
                    {"r", BigInt(p[n] - q[n]).str()}, {"p_ge2", pg.str()},
                    {"q_ge2", qg.str()}, {"r_ge2", rg.str()}, {"errata", marked}});
    os << std::setw(5) << n << std::setw(12) << cell(p[n], "P") << std::setw(12)
       << cell(q[n], "Q") << std::setw(12) << cell(p[n] - q[n], "R") << std::setw(12)
       << cell(pg, "P(;1)") << std::setw(12) << cell(qg, "Q(;1)") << std::setw(12)
       << cell(rg, "R(;1)") << "\n";
  }
  if (!inv.errata.empty()) {
    os << "* differs from the published table; computed by Q(N;1) = Q(N) - Q(N-1;1) "
          "and direct enumeration:\n";
    for (const auto& e : inv.errata) {
      os << "  N=" << e.n << " " << e.column << ": printed " << e.printed << ", computed "
         << e.computed << "\n";
    }
  }
  inv.result = {{"rows", rows}};
  inv.text = os.str();
  return inv;
}

Invocation cmd_plist(const Options& o) {
  Invocation inv;
  const int max_n = o.plist_max;
  inv.inputs = {{"max", max_n}};
  if (max_n < 1 || max_n > partitions::kMaxN) {
    throw DomainError("plist: --max must be in [1, " + std::to_string(partitions::kMaxN) + "]");
  }
  const auto p = partitions::p_table(max_n);
  inv.errata = plist_errata(1, max_n);
  json values = json::array();
  std::ostringstream os;
  for (int n = 1; n <= max_n; ++n) {
    const auto printed = printed_p(n);
    const bool matches = !printed || BigInt(*printed) == p[n];
    values.push_back({{"n", n},
                      {"p", p[n].str()},
                      {"printed", printed ? json(std::to_string(*printed)) : json(nullptr)},
                      {"matches", matches}});
    os << "N=" << n << " P(N)=" << p[n];
    if (!matches) os << "  (published: " << *printed << ")";
    os << "\n";
  }
  inv.result = {{"values", values}};
  inv.text = os.str();
  return inv;
}

// ---- argument handling ------------------------------------------------------

bool is_integer_token(const std::string& s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  return ec == std::errc() && ptr == end;
}

json envelope(const std::string& command, const Invocation& inv) {
  json errata = json::array();
  for (const auto& e : inv.errata) errata.push_back(to_json(e));
  return {{"version", kVersion},
          {"command", command},
          {"inputs", inv.inputs},
          {"result", inv.result},
          {"errata", errata}};
}

json error_envelope(const std::string& command, const char* kind, const std::string& msg) {
  return {{"version", kVersion}, {"command", command}, {"error", {{"kind", kind}, {"message", msg}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  // "A.. -- B.. [flags]": the integers right after "--" form the second
  // partition; anything after them is handed back to the flag parser.
  std::vector<std::string> head;
  std::vector<int> second;
  bool has_separator = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--" && !has_separator) {
      has_separator = true;
      std::size_t j = i + 1;
      for (; j < args.size() && is_integer_token(args[j]); ++j) second.push_back(std::stoi(args[j]));
      head.insert(head.end(), args.begin() + static_cast<std::ptrdiff_t>(j), args.end());
      break;
    }
    head.push_back(args[i]);
  }

  Options o;
  CLI::App app{"symcensus: partition census for block subgroups of O(N)", "symcensus"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json_output, "Emit a single JSON envelope on stdout");
  app.add_option("--output", o.output_file, "Also write the JSON envelope to FILE");

  auto with_n = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("N", o.n, "Dimension")->required();
    sub->fallthrough();
    return sub;
  };
  auto with_parts = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("PARTS", o.parts, "Parts of the partition")->required();
    sub->fallthrough();
    return sub;
  };

  with_n("count", "P, Q, R and their parts>=2 variants");
  auto* list = with_n("list", "Enumerate partitions of N");
  list->add_option("--min-part", o.min_part, "Smallest allowed part");
  list->add_flag("--distinct", o.distinct, "Distinct parts only");
  with_parts("weyl", "Weyl group of the block subgroup");
  with_parts("equiv", "Equivalence of two flags: A.. -- B..");
  with_parts("orbit", "Orbit length r!/prod psi!");
  with_n("census", "Flag classes with trivial/nontrivial Weyl group");
  with_n("special", "Special (double) partition family");
  with_n("solutions", "Number s_N of special partition classes");
  with_parts("pair", "Decomposition and generated group of A.. -- B..");
  auto* vlie = with_parts("verify-lie", "Numerical Lie closure check of A.. -- B..");
  vlie->add_option("--tol", o.tol, "Gram-Schmidt acceptance tolerance");
  vlie->add_option("--rank-tol", o.rank_tol, "Singular-value rank threshold");
  vlie->add_flag("--matrices", o.matrices, "Include the closure basis in the output");
  auto* vinv = with_parts("verify-inv", "Fixed-point independence check of A.. -- B..");
  vinv->add_option("--degree", o.degree, "Polynomial degree cap (even)");
  auto* nodal = with_parts("nodal", "Nodal subspaces forced by a sign character");
  nodal->add_option("--delta", o.delta, "One 0/1 digit per repeated block size")->required();
  with_n("classify", "Transitive actions on S^{N-1}");
  auto* table = app.add_subcommand("table", "Reproduce the table of partition counts");
  table->add_option("--max", o.table_max, "Largest N")->capture_default_str();
  table->fallthrough();
  auto* plist = app.add_subcommand("plist", "List P(N) against the published values");
  plist->add_option("--max", o.plist_max, "Largest N")->capture_default_str();
  plist->fallthrough();

  std::vector<const char*> argv{"symcensus"};
  for (const auto& s : head) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const bool two_partitions = command == "equiv" || command == "pair" ||
                              command == "verify-lie" || command == "verify-inv";
  if (two_partitions && second.empty()) {
    err << "usage error: " << command << " expects two partitions separated by --\n";
    return kUsageError;
  }
  if (!two_partitions && has_separator) {
    err << "usage error: " << command << " takes a single argument list\n";
    return kUsageError;
  }
  o.parts2 = second;

  auto fail = [&](int code, const char* kind, const std::string& msg) {
    err << "error: " << msg << "\n";
    if (o.json_output) out << error_envelope(command, kind, msg).dump() << "\n";
    return code;
  };

  Invocation inv;
  try {
    if (command == "count") inv = cmd_count(o);
    else if (command == "list") inv = cmd_list(o);
    else if (command == "weyl") inv = cmd_weyl(o);
    else if (command == "equiv") inv = cmd_equiv(o);
    else if (command == "orbit") inv = cmd_orbit(o);
    else if (command == "census") inv = cmd_census(o);
    else if (command == "special") inv = cmd_special(o);
    else if (command == "solutions") inv = cmd_solutions(o);
    else if (command == "pair") inv = cmd_pair(o);
    else if (command == "verify-lie") inv = cmd_verify_lie(o);
    else if (command == "verify-inv") inv = cmd_verify_inv(o);
    else if (command == "nodal") inv = cmd_nodal(o);
    else if (command == "classify") inv = cmd_classify(o);
    else if (command == "table") inv = cmd_table(o);
    else if (command == "plist") inv = cmd_plist(o);
  } catch (const IndeterminateError& e) {
    return fail(kIndeterminate, "indeterminate", e.what());
  } catch (const DomainError& e) {
    return fail(kDomainError, "domain", e.what());
  } catch (const std::exception& e) {
    return fail(kDomainError, "internal", e.what());
  }

  const json env = envelope(command, inv);
  if (!o.output_file.empty()) {
    std::ofstream file(o.output_file);
    if (!file) return fail(kDomainError, "io", "cannot write " + o.output_file);
    file << env.dump() << "\n";
  }
  if (o.json_output) {
    out << env.dump() << "\n";
  } else {
    out << inv.text;
    if (!inv.errata.empty() && command != "table" && command != "plist") {
      for (const auto& e : inv.errata) {
        out << "note: published " << e.column << " at N=" << e.n << " is " << e.printed
            << ", computed " << e.computed << "\n";
      }
    }
  }
  return inv.exit_code;
}

}  // namespace symcensus::cli
