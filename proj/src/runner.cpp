#include "ghom/runner.hpp"

#include <cctype>
#include <chrono>
#include <ostream>
#include <sstream>

#include "ghom/errors.hpp"
#include "ghom/families.hpp"
#include "ghom/gdim.hpp"
#include "ghom/homext.hpp"
#include "ghom/script.hpp"

namespace ghom {

using nlohmann::ordered_json;

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

struct OpContext {
  const Environment& env;
  const RunFlags& flags;
  const Statement& st;

  const ComputeStmt& c() const { return st.compute; }

  [[noreturn]] void bad(const std::string& msg) const {
    throw InputError("compute " + c().op + ": " + msg);
  }

  std::string name_arg(std::size_t i) const {
    if (i >= c().args.size() || is_integer_token(c().args[i]))
      bad("expected a declared name as argument " + std::to_string(i + 1));
    return c().args[i];
  }

  int int_arg(std::size_t i) const {
    if (i >= c().args.size() || !is_integer_token(c().args[i]))
      bad("expected an integer as argument " + std::to_string(i + 1));
    return std::stoi(c().args[i]);
  }

  void arity(std::size_t n) const {
    if (c().args.size() != n)
      bad("expected " + std::to_string(n) + " argument(s)");
  }

  // A module argument: a module name, or a ring name standing for the ring
  // as a module over itself.
  FPModule module_arg(std::size_t i, std::string* ring_name = nullptr) const {
    std::string a = name_arg(i);
    auto it = env.modules.find(a);
    if (it != env.modules.end()) {
      if (ring_name) *ring_name = env.ring_of_module.at(a);
      return it->second;
    }
    auto rt = env.rings.find(a);
    if (rt != env.rings.end()) {
      if (ring_name) *ring_name = a;
      return FPModule::ring_module(rt->second);
    }
    bad("'" + a + "' names neither a module nor a ring");
  }

  RingPtr ring_arg(std::size_t i) const {
    std::string a = name_arg(i);
    auto rt = env.rings.find(a);
    if (rt != env.rings.end()) return rt->second;
    auto it = env.ring_of_module.find(a);
    if (it != env.ring_of_module.end()) return env.rings.at(it->second);
    bad("'" + a + "' is not a ring");
  }
};

ordered_json module_json(const std::string& ring_name, const FPModule& M) {
  FPModule m = minimalize(M);
  const PolyRing& S = m.S();
  ordered_json j = ordered_json::object();
  j["generators"] = m.cover().twists;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.presentation().rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < m.presentation().cols(); ++k)
      row.push_back(S.to_string(m.presentation().entry(i, k)));
    rows.push_back(std::move(row));
  }
  j["relations"] = std::move(rows);
  j["relation_twists"] = m.presentation().source().twists;
  j["hilbert"] = hilbert_series(m).to_string();
  j["dsl"] = module_to_dsl(ring_name, m);
  return j;
}

ordered_json betti_json(const BettiTable& table) {
  ordered_json j = ordered_json::object();
  ordered_json steps = ordered_json::array();
  for (const auto& row : table.entries) {
    ordered_json r = ordered_json::object();
    for (const auto& [twist, count] : row) r[std::to_string(twist)] = count;
    steps.push_back(std::move(r));
  }
  j["steps"] = std::move(steps);
  j["terminated"] = table.terminated;
  auto pd = table.pd();
  if (pd)
    j["pd"] = *pd;
  else
    j["pd"] = nullptr;
  return j;
}

std::string gdim_verdict(const GdimReport& rep) {
  switch (rep.kind) {
    case GdimReport::Kind::ZeroModule:
      return "zero-module";
    case GdimReport::Kind::Finite:
      return "finite";
    case GdimReport::Kind::InfiniteUpToBound:
      return "infinite-up-to-bound";
  }
  return "finite";
}

// Dispatches one compute statement.  Every branch fills verdict plus
// op-specific fields; larger payloads go under "witnesses".
void compute_into(ordered_json& j, const OpContext& x) {
  const std::string& op = x.c().op;
  const RunFlags& flags = x.flags;

  if (op == "hilbert") {
    x.arity(1);
    std::string rn;
    FPModule M = x.module_arg(0, &rn);
    j["verdict"] = hilbert_series(M).to_string();
    j["witnesses"] = {{"module", module_json(rn, M)}};
    return;
  }
  if (op == "minimal" || op == "transpose" || op == "dual") {
    x.arity(1);
    std::string rn;
    FPModule M = x.module_arg(0, &rn);
    FPModule out = op == "minimal"      ? minimalize(M)
                   : op == "transpose" ? minimalize(auslander_transpose(M))
                                       : sigma_analysis(M).dual;
    j["verdict"] = is_zero_module(out) ? "zero" : "presented";
    j["module"] = module_json(rn, out);
    return;
  }
  if (op == "betti") {
    std::string rn;
    FPModule M = x.module_arg(0, &rn);
    int upto = -1;
    if (x.c().args.size() == 2) upto = x.int_arg(1);
    else x.arity(1);
    BettiTable table = betti(M, upto);
    j["verdict"] = table.terminated ? "terminated" : "truncated";
    j["betti"] = betti_json(table);
    return;
  }
  if (op == "dim") {
    x.arity(1);
    auto d = krull_dim_module(x.module_arg(0));
    j["verdict"] = d ? std::to_string(*d) : "empty";
    if (d)
      j["dim"] = *d;
    else
      j["dim"] = nullptr;
    return;
  }
  if (op == "depth") {
    x.arity(1);
    int d = depth_module(x.module_arg(0));
    j["verdict"] = std::to_string(d);
    j["depth"] = d;
    return;
  }
  if (op == "grade") {
    x.arity(1);
    auto g = grade_module(x.module_arg(0));
    j["verdict"] = g ? std::to_string(*g) : "infinite";
    if (g)
      j["grade"] = *g;
    else
      j["grade"] = nullptr;
    return;
  }
  if (op == "gorenstein") {
    x.arity(1);
    RingPtr ring = x.ring_arg(0);
    bool ok = is_gorenstein(ring);
    j["verdict"] = ok ? "gorenstein" : "not-gorenstein";
    j["result"] = ok;
    j["witnesses"] = {{"depth", ring_depth(ring)}, {"dim", ring->dim()}};
    return;
  }
  if (op == "sigma") {
    x.arity(1);
    std::string rn;
    SigmaAnalysis sa = sigma_analysis(x.module_arg(0, &rn));
    j["verdict"] = sa.reflexive    ? "reflexive"
                   : sa.torsionless ? "torsionless"
                                    : "neither";
    j["witnesses"] = {
        {"kernel_hilbert", hilbert_series(sa.kernel_mod).to_string()},
        {"cokernel_hilbert", hilbert_series(sa.cokernel_mod).to_string()},
        {"dual", module_json(rn, sa.dual)},
        {"double_dual", module_json(rn, sa.double_dual)},
    };
    return;
  }
  if (op == "torsionless") {
    std::string rn;
    FPModule M = x.module_arg(0, &rn);
    int k = x.c().args.size() == 2 ? x.int_arg(1) : 1;
    TorsionlessReport rep = is_k_torsionless(M, k);
    j["verdict"] = rep.ok ? "k-torsionless" : "not-k-torsionless";
    j["result"] = rep.ok;
    if (!rep.ok) {
      j["witness"] = {{"i", rep.first_failure}};
      if (rep.witness)
        j["witnesses"] = {{"obstruction_hilbert", rep.witness->to_string()}};
    }
    j["k"] = k;
    return;
  }
  if (op == "pushforward") {
    x.arity(1);
    std::string rn;
    Pushforward pf = universal_pushforward(x.module_arg(0, &rn));
    j["verdict"] = pf.injective ? "embeds" : "kernel-nonzero";
    j["witnesses"] = {
        {"free_twists", pf.target.cover().twists},
        {"injective", pf.injective},
        {"dual_exact", pf.dual_exact},
        {"cokernel", module_json(rn, pf.N)},
    };
    return;
  }
  if (op == "embed") {
    std::string rn;
    FPModule M = x.module_arg(0, &rn);
    int k = x.c().args.size() == 2 ? x.int_arg(1) : 1;
    SyzygyEmbedding emb = syzygy_embedding(M, k);
    j["verdict"] = emb.ok ? "embeds" : "obstructed";
    j["result"] = emb.ok;
    j["k"] = k;
    j["witnesses"] = {{"steps_completed", emb.steps_completed}};
    if (!emb.ok) {
      j["witnesses"]["failed_at"] = emb.failed_at;
      if (emb.obstruction)
        j["witnesses"]["obstruction_hilbert"] = emb.obstruction->to_string();
    }
    return;
  }
  if (op == "ext" || op == "hom") {
    std::string rn;
    int i = 0;
    FPModule M = op == "ext" ? (i = x.int_arg(0), x.module_arg(1, &rn))
                             : x.module_arg(0, &rn);
    FPModule N = x.module_arg(op == "ext" ? 2 : 1);
    x.arity(op == "ext" ? 3 : 2);
    FPModule E = ext_module(i, M, N);
    j["verdict"] = is_zero_module(E) ? "zero" : "presented";
    j["i"] = i;
    j["module"] = module_json(rn, E);
    return;
  }
  if (op == "gdim") {
    x.arity(1);
    GdimReport rep = gdim(x.module_arg(0), flags.bound);
    j["verdict"] = gdim_verdict(rep);
    if (rep.kind == GdimReport::Kind::Finite) {
      j["g"] = rep.value;
      j["abf"] = rep.value + rep.depth_of_module == rep.depth_of_ring;
    }
    ordered_json w = ordered_json::object();
    w["nonzero_ext"] = rep.nonzero_ext;
    if (rep.kind != GdimReport::Kind::ZeroModule) {
      w["depth_module"] = rep.depth_of_module;
      w["depth_ring"] = rep.depth_of_ring;
      w["syzygy_test"] = {{"ok", rep.syzygy_test.ok},
                          {"torsionless", rep.syzygy_test.torsionless},
                          {"reflexive", rep.syzygy_test.reflexive}};
    }
    j["witnesses"] = std::move(w);
    j["bound"] = rep.bound;
    return;
  }
  if (op == "gdim_zero") {
    x.arity(1);
    GdimZeroReport rep = gdim_zero(x.module_arg(0), flags.bound);
    j["verdict"] = rep.ok ? "gdim-zero" : "not-gdim-zero";
    j["result"] = rep.ok;
    j["witnesses"] = {{"torsionless", rep.torsionless},
                      {"reflexive", rep.reflexive}};
    if (!rep.ok && !rep.failing_side.empty()) {
      j["witnesses"]["failing_side"] = rep.failing_side;
      j["witnesses"]["failing_index"] = rep.failing_index;
    }
    j["bound"] = rep.bound;
    return;
  }
  if (op == "profile") {
    std::string rn;
    FPModule M = x.module_arg(0, &rn);
    int k = x.c().args.size() == 2 ? x.int_arg(1) : 1;
    GradeProfile p = ext_grade_profile(M, k);
    j["verdict"] = p.ok ? "grades-dominate" : "grade-too-small";
    j["result"] = p.ok;
    j["k"] = k;
    ordered_json rows = ordered_json::array();
    for (const auto& row : p.rows) {
      ordered_json rr = ordered_json::object();
      rr["i"] = row.i;
      if (row.grade)
        rr["grade"] = *row.grade;
      else
        rr["grade"] = nullptr;
      rr["ok"] = row.ok;
      rows.push_back(std::move(rr));
    }
    j["witnesses"] = {{"rows", std::move(rows)}};
    return;
  }
  if (op == "regular") {
    if (x.c().args.size() != 1 || !x.c().poly)
      x.bad("expected a module and a parenthesized element");
    std::string rn;
    FPModule M = x.module_arg(0, &rn);
    const PolyRing& S = M.S();
    Polynomial p = S.parse(*x.c().poly);
    bool reg = is_regular_on(p, M);
    j["verdict"] = reg ? "regular" : "zerodivisor";
    j["result"] = reg;
    j["element"] = S.to_string(p);
    return;
  }
  x.bad("unknown operation");
}

void verbose_line(std::ostream* out, const ordered_json& j) {
  if (!out) return;
  *out << "== " << j.value("command", std::string("?"));
  if (j.contains("inputs") && j["inputs"].contains("statement"))
    *out << " | " << j["inputs"]["statement"].get<std::string>();
  if (j.contains("verdict")) *out << " -> " << j["verdict"].get<std::string>();
  *out << "\n";
}

}  // namespace

CoefficientField field_from_flag(const std::string& name) {
  if (name == "QQ") return CoefficientField::rationals();
  auto parse_prime = [&](std::size_t from) -> CoefficientField {
    for (std::size_t i = from; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw InputError("unknown field '" + name + "' (expected QQ or Fp:<p>)");
    if (from == name.size())
      throw InputError("unknown field '" + name + "' (expected QQ or Fp:<p>)");
    return CoefficientField::prime_field(std::stol(name.substr(from)));
  };
  if (name.rfind("Fp:", 0) == 0) return parse_prime(3);
  if (!name.empty() && name[0] == 'F') return parse_prime(1);
  throw InputError("unknown field '" + name + "' (expected QQ or Fp:<p>)");
}

MonomialOrder order_from_flag(const std::string& name) {
  if (name == "grevlex") return MonomialOrder{OrderKind::GrevLex};
  if (name == "grlex") return MonomialOrder{OrderKind::GrLex};
  throw InputError("unknown order '" + name + "' (expected grevlex or grlex)");
}

ordered_json suite_to_json(const SuiteResult& result) {
  ordered_json j = ordered_json::object();
  j["command"] = "verify";
  j["suite"] = result.suite;
  j["seed"] = result.seed;
  j["verdict"] = result.ok() ? "pass" : "fail";
  ordered_json as = ordered_json::array();
  int passed = 0;
  for (const auto& a : result.assertions) {
    as.push_back({{"tag", a.tag},
                  {"instance", a.instance},
                  {"pass", a.pass},
                  {"details", a.details}});
    passed += a.pass ? 1 : 0;
  }
  j["passed"] = passed;
  j["total"] = static_cast<int>(result.assertions.size());
  j["assertions"] = std::move(as);
  if (!result.counterexamples.empty())
    j["counterexamples"] = result.counterexamples;
  return j;
}

RunResult run_script(const std::string& text, const RunFlags& flags,
                     std::ostream* verbose_out) {
  RunResult out;
  out.report = ordered_json::array();
  try {
    Script sc = parse_script(text);
    MonomialOrder order = order_from_flag(flags.order);
    Environment env = build_environment(sc, order);
    for (const Statement& st : sc.statements) {
      if (st.kind == Statement::Kind::Ring || st.kind == Statement::Kind::Module)
        continue;
      if (st.kind == Statement::Kind::Verify) {
        SuiteResult s = run_suite(st.verify.suite, flags.seed,
                                  field_from_flag(flags.field), order);
        ordered_json j = suite_to_json(s);
        j["inputs"] = {{"statement", st.text}};
        if (!s.ok()) out.exit_code = std::max(out.exit_code, 1);
        verbose_line(flags.verbose ? verbose_out : nullptr, j);
        out.report.push_back(std::move(j));
        continue;
      }
      ordered_json j = ordered_json::object();
      j["command"] = st.compute.op;
      ordered_json inputs = ordered_json::object();
      inputs["statement"] = st.text;
      inputs["args"] = st.compute.args;
      if (st.compute.poly) inputs["element"] = *st.compute.poly;
      j["inputs"] = std::move(inputs);
      auto t0 = std::chrono::steady_clock::now();
      compute_into(j, OpContext{env, flags, st});
      if (flags.timings) {
        auto dt = std::chrono::steady_clock::now() - t0;
        j["timings"] = {
            {"ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(dt).count()}};
      }
      verbose_line(flags.verbose ? verbose_out : nullptr, j);
      out.report.push_back(std::move(j));
    }
  } catch (const InputError& e) {
    out.report.push_back({{"error", {{"type", "input"}, {"message", e.what()}}}});
    out.exit_code = 2;
  } catch (const TheoryViolation& e) {
    out.report.push_back(
        {{"error", {{"type", "theory-violation"}, {"message", e.what()}}}});
    out.exit_code = 1;
  }
  return out;
}

RunResult run_suites(const std::vector<std::string>& names,
                     const RunFlags& flags, std::ostream* verbose_out) {
  RunResult out;
  out.report = ordered_json::array();
  std::vector<std::string> expanded;
  for (const std::string& n : names) {
    if (n == "all") {
      auto all = suite_names();
      expanded.insert(expanded.end(), all.begin(), all.end());
    } else {
      expanded.push_back(n);
    }
  }
  try {
    CoefficientField field = field_from_flag(flags.field);
    MonomialOrder order = order_from_flag(flags.order);
    for (const std::string& n : expanded) {
      SuiteResult s = run_suite(n, flags.seed, field, order);
      if (!s.ok()) out.exit_code = std::max(out.exit_code, 1);
      ordered_json j = suite_to_json(s);
      if (flags.verbose && verbose_out) {
        *verbose_out << "== suite " << s.suite << ": "
                     << (s.ok() ? "pass" : "FAIL") << " ("
                     << j["passed"].get<int>() << "/" << j["total"].get<int>()
                     << ")\n";
        for (const auto& a : s.assertions)
          if (!a.pass)
            *verbose_out << "   failed " << a.tag << " on " << a.instance
                         << ": " << a.details << "\n";
      }
      out.report.push_back(std::move(j));
    }
  } catch (const InputError& e) {
    out.report.push_back({{"error", {{"type", "input"}, {"message", e.what()}}}});
    out.exit_code = 2;
  } catch (const TheoryViolation& e) {
    out.report.push_back(
        {{"error", {{"type", "theory-violation"}, {"message", e.what()}}}});
    out.exit_code = 1;
  }
  return out;
}

RunResult list_family(const std::string& name, int count, const RunFlags& flags) {
  RunResult out;
  out.report = ordered_json::array();
  try {
    CoefficientField field = field_from_flag(flags.field);
    auto instances = generate_family(name, count, flags.seed, field);
    ordered_json j = ordered_json::object();
    j["command"] = "family";
    j["family"] = name;
    j["seed"] = flags.seed;
    ordered_json arr = ordered_json::array();
    for (const auto& inst : instances)
      arr.push_back({{"description", inst.description},
                     {"script", inst.script},
                     {"modules", inst.module_names}});
    j["instances"] = std::move(arr);
    out.report.push_back(std::move(j));
  } catch (const InputError& e) {
    out.report.push_back({{"error", {{"type", "input"}, {"message", e.what()}}}});
    out.exit_code = 2;
  }
  return out;
}

}  // namespace ghom
