#pragma once

// Named, seeded verification suites. Every check produces a CheckReport; a
// failure carries the instance and the offending residual.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sixvertex/actions.hpp"
#include "sixvertex/boundary.hpp"
#include "sixvertex/izergin.hpp"
#include "sixvertex/json_io.hpp"
#include "sixvertex/lattice.hpp"
#include "sixvertex/linsys.hpp"
#include "sixvertex/matrix.hpp"
#include "sixvertex/random.hpp"
#include "sixvertex/scalar.hpp"

namespace sixvertex {

enum class CheckStatus { pass, fail, skipped_degenerate };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped_degenerate: return "skipped-degenerate";
  }
  return "?";
}

struct CheckReport {
  std::string check;
  std::size_t index = 0;
  Json instance;
  CheckStatus status = CheckStatus::pass;
  Json witness;  // null unless failed or skipped
  Json note;     // optional extra data, e.g. which reading of a relation held

  Json to_json() const {
    Json j{{"check", check}, {"index", index}, {"status", status_name(status)}, {"instance", instance}};
    if (!witness.is_null()) j["witness"] = witness;
    if (!note.is_null()) j["note"] = note;
    return j;
  }
};

// A check body returns nullopt on success or a witness describing the failure.
using CheckResult = std::optional<Json>;

class Recorder {
 public:
  void run(const std::string& name, const Json& instance, const std::function<CheckResult()>& body,
           Json note = nullptr) {
    CheckReport r{name, reports_.size(), instance, CheckStatus::pass, nullptr, std::move(note)};
    try {
      if (auto w = body()) {
        r.status = CheckStatus::fail;
        r.witness = *w;
      }
    } catch (const DegenerateError& e) {
      r.status = CheckStatus::skipped_degenerate;
      r.witness = Json{{"quantity", e.quantity()}, {"message", e.what()}};
    } catch (const std::exception& e) {
      r.status = CheckStatus::fail;
      r.witness = Json{{"error", e.what()}};
    }
    reports_.push_back(std::move(r));
  }

  // Attaches a note to the most recent report.
  void annotate(Json note) {
    if (!reports_.empty()) reports_.back().note = std::move(note);
  }

  const std::vector<CheckReport>& reports() const { return reports_; }
  std::vector<CheckReport> take() { return std::move(reports_); }

 private:
  std::vector<CheckReport> reports_;
};

// ---------------------------------------------------------------------------
// Witness helpers

inline CheckResult zero_or_witness(const Matrix<Scalar>& m) {
  std::size_t nonzero = 0;
  Json first;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (nonzero++ == 0) first = Json{{"row", i}, {"col", j}, {"value", to_json(m(i, j))}};
    }
  }
  if (nonzero == 0) return std::nullopt;
  return Json{{"residual_nonzero_entries", nonzero}, {"first", first}};
}

inline CheckResult zero_or_witness(const std::vector<Scalar>& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) return Json{{"residual_index", k}, {"value", to_json(v[k])}};
  }
  return std::nullopt;
}

inline CheckResult zero_or_witness(const std::vector<Matrix<Scalar>>& ms) {
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (auto w = zero_or_witness(ms[k])) {
      (*w)["identity"] = k;
      return w;
    }
  }
  return std::nullopt;
}

inline CheckResult zero_or_witness(const std::vector<std::vector<Scalar>>& vs) {
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (auto w = zero_or_witness(vs[k])) {
      (*w)["identity"] = k;
      return w;
    }
  }
  return std::nullopt;
}

inline CheckResult equal_or_witness(const Scalar& lhs, const Scalar& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
}

inline CheckResult limit_witness(const LimitReport& r) {
  if (r.pass) return std::nullopt;
  return Json{{"expected", {{"re", r.expected_re}, {"im", r.expected_im}}},
              {"magnitudes", r.magnitudes},
              {"relative_errors", r.rel_errors},
              {"detail", r.detail}};
}

inline Json params_json(const ParamSet<Scalar>& p) {
  return Json{{"c", to_json(p.c)}, {"u", to_json(p.u)}, {"v", to_json(p.v)}};
}

// ---------------------------------------------------------------------------
// Suites

enum class Suite {
  ybe,
  rtt,
  yangian_actions,
  modified_actions,
  mult_actions,
  linear_systems,
  recursion,
  offshell,
  izergin_equiv,
  izergin_limits,
  cauchy,
  binomial,
  asymptotics,
  full_equivalence
};

inline constexpr std::array<Suite, 14> kAllSuites{
    Suite::ybe,          Suite::rtt,           Suite::yangian_actions, Suite::modified_actions,
    Suite::mult_actions, Suite::linear_systems, Suite::recursion,       Suite::offshell,
    Suite::izergin_equiv, Suite::izergin_limits, Suite::cauchy,         Suite::binomial,
    Suite::asymptotics,  Suite::full_equivalence};

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::ybe: return "ybe";
    case Suite::rtt: return "rtt";
    case Suite::yangian_actions: return "yangian_actions";
    case Suite::modified_actions: return "modified_actions";
    case Suite::mult_actions: return "mult_actions";
    case Suite::linear_systems: return "linear_systems";
    case Suite::recursion: return "recursion";
    case Suite::offshell: return "offshell";
    case Suite::izergin_equiv: return "izergin_equiv";
    case Suite::izergin_limits: return "izergin_limits";
    case Suite::cauchy: return "cauchy";
    case Suite::binomial: return "binomial";
    case Suite::asymptotics: return "asymptotics";
    case Suite::full_equivalence: return "full_equivalence";
  }
  return "?";
}

inline std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : kAllSuites) {
    if (name == suite_name(s)) return s;
  }
  return std::nullopt;
}

// Zero means "suite default".
struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t max_size = 0;
  std::size_t instances = 0;
};

namespace oracle {

inline std::size_t pick(std::size_t value, std::size_t fallback) { return value == 0 ? fallback : value; }

// Every third instance uses Gaussian-rational data.
inline bool complex_slot(std::size_t k) { return k % 3 == 2; }

inline void ybe(Recorder& rec, InstanceGenerator& gen, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const auto p = gen.params(3, 0, complex_slot(k));
    rec.run("ybe", params_json(p), [&] { return zero_or_witness(ybe_residual(p.u[0], p.u[1], p.u[2], p.c)); });
  }
}

inline Matrix<Scalar> random_matrix(InstanceGenerator& gen, std::size_t rows, std::size_t cols, bool complex) {
  Matrix<Scalar> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = gen.scalar(complex);
  }
  return m;
}

inline void rtt(Recorder& rec, InstanceGenerator& gen, std::size_t max_n, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = k % (max_n + 1);
    const bool cx = complex_slot(k);
    const auto p = gen.params(2, n, cx);
    const Json inst = params_json(p);
    rec.run("rtt", inst, [&] { return zero_or_witness(rtt_residual(p.u[0], p.u[1], p.v, p.c)); });
    rec.run("aux_form_rtt", inst, [&] { return zero_or_witness(aux_form_rtt_residual(p.u[0], p.u[1], p.v, p.c)); });
    rec.run("generator_exchange", inst,
            [&] { return zero_or_witness(generator_exchange_residuals(p.u[0], p.u[1], p.v, p.c)); });

    const auto q = gen.params(n, 2, cx);
    rec.run("rtt_hat", params_json(q), [&] { return zero_or_witness(rtt_hat_residual(q.v[0], q.v[1], q.u, q.c)); });

    const std::size_t other = std::clamp<std::size_t>(n, 1, 2);
    const auto rows = gen.params(2, other, cx);
    rec.run("yba_rows", params_json(rows), [&] { return zero_or_witness(yba_residual(rows, 0, false)); });
    const auto cols = gen.params(other, 2, cx);
    rec.run("yba_columns", params_json(cols), [&] { return zero_or_witness(yba_residual(cols, 0, true)); });

    const auto t = gen.params(2, 0, cx);
    const Matrix<Scalar> x = random_matrix(gen, 2, 2, cx);
    rec.run("twist_invariance", params_json(t),
            [&] { return zero_or_witness(twist_invariance_residual(t.u[0], t.u[1], t.c, x)); });
  }
}

inline void yangian_actions(Recorder& rec, InstanceGenerator& gen, std::size_t max_n, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = k % (max_n + 1);
    const bool cx = complex_slot(k);
    const auto p = gen.params(1, n, cx);
    rec.run("highest_lowest_weight", params_json(p),
            [&] { return zero_or_witness(highest_weight_residuals(p.u[0], p.v, p.c)); });
    Vec2<Scalar> x{Scalar(gen.nonzero_rational()), Scalar(gen.nonzero_rational())};
    // Edge vectors exercise each branch on its own.
    if (k % 4 == 1) x[1] = Scalar(0);
    if (k % 4 == 3) x[0] = Scalar(0);
    Json inst = params_json(p);
    inst["x"] = to_json(x);
    for (ActionSide side : {ActionSide::right, ActionSide::left}) {
      const std::string tag = side == ActionSide::right ? "right" : "left";
      if (!x[0].is_zero()) {
        rec.run("product_state_action_" + tag + "_x1", inst, [&] {
          return zero_or_witness(product_state_action_residuals(p.u[0], p.v, p.c, x, true, side));
        });
      }
      if (!x[1].is_zero()) {
        rec.run("product_state_action_" + tag + "_x2", inst, [&] {
          return zero_or_witness(product_state_action_residuals(p.u[0], p.v, p.c, x, false, side));
        });
      }
    }
  }
}

inline CheckResult constant_relations(const BoundaryConfig<Scalar>& cfg, const DerivedConstants<Scalar>& k) {
  auto rel = [&](const char* d, const char* o, const Scalar& tr) -> CheckResult {
    const Scalar lhs = k.require(d) + cfg.tr_B * k.require(o);
    if (lhs == tr) return std::nullopt;
    return Json{{"relation", std::string(d) + " + tr(B) " + o}, {"lhs", to_json(lhs)}, {"rhs", to_json(tr)}};
  };
  for (auto r : {rel("a_N", "c_N", cfg.tr_A), rel("d_N", "f_N", cfg.tr_D), rel("a_S", "c_S", cfg.tr_A),
                 rel("d_S", "f_S", cfg.tr_D)}) {
    if (r) return r;
  }
  const Scalar& beta = k.require("beta");
  if (auto w = equal_or_witness(beta, k.require("a_S") / k.require("a_N"))) return w;
  if (auto w = equal_or_witness(beta, k.require("d_N") / k.require("d_S"))) return w;
  if (auto w = equal_or_witness(k.require("chi"), Scalar(1) - beta)) return w;
  if (auto w = equal_or_witness(k.require("chi"), cfg.tr_Bhat * cfg.tr_B / cfg.tr_BBhat)) return w;
  const auto sy = sigma_y<Scalar>();
  const Scalar twisted = trace(cfg.B * sy * transpose(cfg.Bhat) * sy);
  if (auto w = equal_or_witness(twisted + cfg.tr_BBhat, cfg.tr_B * cfg.tr_Bhat)) return w;
  return std::nullopt;
}

inline void modified_actions(Recorder& rec, InstanceGenerator& gen, std::size_t max_n, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = k % (max_n + 1);
    const bool cx = complex_slot(k);
    const Instance in = gen.instance(0, n, cx);
    const auto& cfg = in.cfg;
    const auto consts = derive_constants(cfg);
    const Scalar u = gen.extra_parameter(in.params, cx);
    const Scalar v = gen.extra_parameter(ParamSet<Scalar>{{u}, in.params.v, in.params.c}, cx);
    Json inst = to_json(in);
    inst["spectral"] = to_json(std::vector<Scalar>{u, v});

    for (ActionSide side : {ActionSide::right, ActionSide::left}) {
      for (AuxKind op : {AuxKind::A, AuxKind::D}) {
        const std::string name = std::string("action_") + (side == ActionSide::right ? "right_" : "left_") +
                                 (op == AuxKind::A ? "A" : "D");
        rec.run(name, inst, [&] { return zero_or_witness(action_check(side, op, u, in.params, cfg, consts)); });
      }
    }
    rec.run("modified_exchange_A", inst,
            [&] { return zero_or_witness(modified_exchange_residual(AuxKind::A, u, v, in.params, cfg)); });
    rec.run("modified_exchange_D", inst,
            [&] { return zero_or_witness(modified_exchange_residual(AuxKind::D, u, v, in.params, cfg)); });
    rec.run("constant_relations", inst, [&] { return constant_relations(cfg, consts); });
    rec.run("rescaling_invariance", inst, [&]() -> CheckResult {
      const Scalar lam(gen.nonzero_rational());
      auto sc = [&](Vec2<Scalar> x) { return Vec2<Scalar>{lam * x[0], lam * x[1]}; };
      const std::size_t which = k % 4;
      const auto scaled = build_boundary(which == 0 ? sc(cfg.w) : cfg.w, which == 1 ? sc(cfg.e) : cfg.e,
                                         which == 2 ? sc(cfg.n) : cfg.n, which == 3 ? sc(cfg.s) : cfg.s,
                                         cfg.a, cfg.d_tilde);
      const auto k2 = derive_constants(scaled);
      if (auto w = equal_or_witness(consts.require("beta"), k2.require("beta"))) return w;
      return equal_or_witness(consts.require("chi"), k2.require("chi"));
    });
    rec.run("auxiliary_vector_independence", inst, [&]() -> CheckResult {
      const auto q = gen.params(std::min<std::size_t>(n, 2), n, cx);
      const auto other = build_boundary(cfg.w, cfg.e, cfg.n, cfg.s, gen.vector2(cx), gen.vector2(cx));
      const auto k2 = derive_constants(other);
      return equal_or_witness(closed_form_Z(q, cfg, consts, IzerginMethod::det_v),
                              closed_form_Z(q, other, k2, IzerginMethod::det_v));
    });
  }
}

inline ParamSet<Scalar> with_extra_u(InstanceGenerator& gen, const ParamSet<Scalar>& p, bool cx) {
  ParamSet<Scalar> q = p;
  q.u.push_back(gen.extra_parameter(p, cx));
  return q;
}

inline void mult_actions(Recorder& rec, InstanceGenerator& gen, std::size_t max_m, std::size_t max_n,
                         std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t m = k % (max_m + 1), n = (k / (max_m + 1)) % (max_n + 1);
    const bool cx = complex_slot(k);
    Instance in = gen.instance(m, n, cx);
    in.params = with_extra_u(gen, in.params, cx);
    const Json inst = to_json(in);
    for (std::size_t i = 0; i < in.params.m(); ++i) {
      rec.run("multiple_action_A", inst,
              [&] { return zero_or_witness(multiple_action_check(AuxKind::A, i, in.params, in.cfg)); });
      rec.run("multiple_action_D", inst,
              [&] { return zero_or_witness(multiple_action_check(AuxKind::D, i, in.params, in.cfg)); });
    }
  }
}

inline std::vector<Scalar> random_w(InstanceGenerator& gen, const ParamSet<Scalar>& p, bool cx) {
  // Generic with respect to u so W is finite.
  std::vector<Scalar> w;
  ParamSet<Scalar> acc{p.u, {}, p.c};
  for (std::size_t k = 0; k < p.m(); ++k) {
    const Scalar x = gen.extra_parameter(acc, cx);
    w.push_back(x);
    acc.v.push_back(x);
  }
  return w;
}

inline void linear_systems(Recorder& rec, InstanceGenerator& gen, std::size_t max_n, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = k % (max_n + 1);
    const bool cx = complex_slot(k);
    Instance in = gen.instance(n, n, cx);
    in.params = with_extra_u(gen, in.params, cx);
    const auto& p = in.params;
    const Json inst = to_json(in);
    const auto consts = derive_constants(in.cfg);
    const auto sys = build_systems(p, consts);

    rec.run("det_L_A_zero", inst, [&] { return equal_or_witness(det(sys.L_A), Scalar(0)); });
    rec.run("det_L_D_zero", inst, [&] { return equal_or_witness(det(sys.L_D), Scalar(0)); });
    rec.run("rank_L", inst, [&]() -> CheckResult {
      const std::size_t ra = rank(sys.L_A), rd = rank(sys.L_D);
      if (ra == n && rd == n) return std::nullopt;
      return Json{{"rank_L_A", ra}, {"rank_L_D", rd}, {"expected", n}};
    });
    const auto X = kernel_vector(p, in.cfg);
    rec.run("kernel_vector_A", inst, [&] { return zero_or_witness(sys.L_A * X); });
    rec.run("kernel_vector_D", inst, [&] { return zero_or_witness(sys.L_D * X); });

    const auto w = random_w(gen, p, cx);
    rec.run("w_interpolation", inst, [&]() -> CheckResult {
      const auto t = w_transform(sys, w);
      if (!t.failed_identities.empty()) return Json{{"w", to_json(w)}, {"failed", t.failed_identities}};
      return equal_or_witness(t.det_W, t.det_W_closed);
    });

    const Scalar& beta = consts.require("beta");
    const Matrix<Scalar> common = common_system(p, beta);
    std::vector<Scalar> frees{default_w_free(p.v, p.c)};
    for (int extra = 0; extra < 2; ++extra) frees.push_back(gen.extra_parameter(ParamSet<Scalar>{p.u, p.v, p.c}, cx));
    for (SystemKind kind : {SystemKind::A, SystemKind::D}) {
      const std::string tag = kind == SystemKind::A ? "A" : "D";
      for (const Scalar& wf : frees) {
        Json winst = inst;
        winst["w_free"] = to_json(wf);
        rec.run("specialized_last_row_" + tag, winst, [&]() -> CheckResult {
          std::vector<Scalar> ws = specialized_w(p.v, p.c, kind, wf);
          const auto t = w_transform(sys, ws);
          const Matrix<Scalar>& L = kind == SystemKind::A ? t.LA_tilde : t.LD_tilde;
          if (auto bad = zero_or_witness(L.block(n, 0, 1, L.cols()))) return bad;
          return zero_or_witness(renormalized_rows(L, p.v, p.c, kind, wf) - common);
        });
      }
    }
  }
}

inline void recursion(Recorder& rec, InstanceGenerator& gen, std::size_t max_n, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = k % (max_n + 1);
    const bool cx = complex_slot(k);
    Instance in = gen.instance(n, n, cx);
    in.params = with_extra_u(gen, in.params, cx);
    rec.run("recursion", to_json(in), [&] {
      const auto r = recursion_check(in.params, in.cfg);
      return equal_or_witness(r.lhs, r.rhs);
    });
  }
}

inline void offshell(Recorder& rec, InstanceGenerator& gen, std::size_t max_size, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t m = k % (max_size + 1), n = (k / (max_size + 1)) % (max_size + 1);
    const bool cx = complex_slot(k);
    Instance in = gen.instance(m, n, cx);
    in.params = with_extra_u(gen, in.params, cx);
    const auto consts = derive_constants(in.cfg);
    const std::size_t i = gen.index(in.params.m());
    Json inst = to_json(in);
    inst["i"] = i;
    OffshellReport<Scalar> r;
    bool have = false;
    rec.run("offshell_A", inst, [&] {
      r = offshell_system_check(i, in.params, in.cfg, consts);
      have = true;
      return equal_or_witness(r.lhs_A, r.rhs);
    });
    rec.run("offshell_D", inst, [&] { return equal_or_witness(r.lhs_D_sum_index, r.rhs); });
    if (have) rec.annotate(Json{{"fixed_index_reading_holds", r.lhs_D_fixed_index == r.rhs}});
  }
}

inline Scalar random_z(InstanceGenerator& gen, bool cx) {
  for (;;) {
    const Scalar z = gen.scalar(cx);
    if (!z.is_zero() && z != Scalar(1)) return z;
  }
}

inline void izergin_equiv(Recorder& rec, InstanceGenerator& gen, std::size_t max_size, std::size_t count) {
  const std::size_t side = max_size + 1;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t m = k % side, n = (k / side) % side;
    const bool cx = complex_slot(k);
    const auto p = gen.params(m, n, cx);
    const Scalar z = random_z(gen, cx);
    Json inst = params_json(p);
    inst["z"] = to_json(z);
    rec.run("four_representations", inst, [&]() -> CheckResult {
      const Scalar ref = mod_izergin(p, z, IzerginMethod::det_v);
      for (IzerginMethod meth : kIzerginMethods) {
        const Scalar val = mod_izergin(p, z, meth);
        if (val != ref) return Json{{"method", method_name(meth)}, {"value", to_json(val)}, {"det-v", to_json(ref)}};
      }
      return std::nullopt;
    });
    rec.run("izergin_symmetry", inst, [&] {
      auto& rng = gen.engine();
      const ParamSet<Scalar> q{permuted(p.u, random_permutation(m, rng)), permuted(p.v, random_permutation(n, rng)), p.c};
      return equal_or_witness(mod_izergin(p, z, IzerginMethod::det_v), mod_izergin(q, z, IzerginMethod::det_v));
    });
    rec.run("z_zero_single_term", params_json(p), [&]() -> CheckResult {
      const Scalar expect = kernel_product(Kernel::f, p.u, p.v, p.c);
      if (auto w = equal_or_witness(mod_izergin(p, Scalar(0), IzerginMethod::sum_v), expect)) return w;
      return equal_or_witness(mod_izergin(p, Scalar(0), IzerginMethod::det_v), expect);
    });
    if (m < n) {
      rec.run("vanishing_at_z_one", params_json(p), [&]() -> CheckResult {
        for (IzerginMethod meth : kIzerginMethods) {
          const Scalar val = mod_izergin(p, Scalar(1), meth);
          if (!val.is_zero()) return Json{{"method", method_name(meth)}, {"value", to_json(val)}};
        }
        return std::nullopt;
      });
    }
  }
}

inline void izergin_limits(Recorder& rec, InstanceGenerator& gen, std::size_t max_size, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t m = 1 + k % max_size, n = 1 + (k / max_size) % max_size;
    const bool cx = complex_slot(k);
    const auto p = gen.params(m, n, cx);
    const Scalar z = random_z(gen, cx);
    const std::size_t jv = gen.index(n), ju = gen.index(m);
    Json inst = params_json(p);
    inst["z"] = to_json(z);
    inst["j_v"] = jv;
    inst["j_u"] = ju;
    rec.run("limit_v_to_infinity", inst, [&] { return limit_witness(izergin_limit_check(p, z, LimitVariable::v, jv)); });
    rec.run("limit_u_to_infinity", inst, [&] { return limit_witness(izergin_limit_check(p, z, LimitVariable::u, ju)); });
  }
}

// sum_l Cinv_il / h(u_l, v_j) = g(v_i, v^i) ht(v_j, v^j) / (g(u, v_i) h(u, v_j) h(v_i, v_j))
inline Matrix<Scalar> cauchy_second_rule_residual(const ParamSet<Scalar>& p) {
  const std::size_t n = p.n();
  const Matrix<Scalar> inv = cauchy_inverse(p);
  Matrix<Scalar> res(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar lhs(0);
      for (std::size_t l = 0; l < n; ++l) lhs += inv(i, l) / h(p.u[l], p.v[j], p.c);
      const Scalar rhs = kernel_product(Kernel::g, p.v[i], without(p.v, i), Side::left, p.c) *
                         kernel_product(Kernel::htilde, p.v[j], without(p.v, j), Side::left, p.c) /
                         (kernel_product(Kernel::g, p.v[i], p.u, Side::right, p.c) *
                          kernel_product(Kernel::h, p.v[j], p.u, Side::right, p.c) * h(p.v[i], p.v[j], p.c));
      res(i, j) = lhs - rhs;
    }
  }
  return res;
}

inline void cauchy(Recorder& rec, InstanceGenerator& gen, std::size_t max_n, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 1 + k % max_n;
    const bool cx = complex_slot(k);
    const auto p = gen.params(n, n, cx);
    const Json inst = params_json(p);
    rec.run("cauchy_det", inst, [&] { return equal_or_witness(cauchy_det(p), det(cauchy_matrix(p))); });
    rec.run("cauchy_inverse", inst, [&] {
      return zero_or_witness(cauchy_matrix(p) * cauchy_inverse(p) - Matrix<Scalar>::identity(n));
    });
    rec.run("cauchy_summation_rule_1", inst, [&] {
      return zero_or_witness(cauchy_inverse(p) * cauchy_matrix(p) - Matrix<Scalar>::identity(n));
    });
    rec.run("cauchy_summation_rule_2", inst, [&] { return zero_or_witness(cauchy_second_rule_residual(p)); });
  }
}

inline void binomial(Recorder& rec, InstanceGenerator& gen, std::size_t max_n, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = k % (max_n + 1);
    const auto p = gen.params(n, 0, complex_slot(k));
    rec.run("binomial", params_json(p), [&]() -> CheckResult {
      std::vector<Scalar> sums(n + 1, Scalar(0));
      std::vector<Scalar> in, out;
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        detail::split(p.u, mask, in, out);
        sums[in.size()] += kernel_product(Kernel::f, in, out, p.c);
      }
      long choose = 1;
      for (std::size_t q = 0; q <= n; ++q) {
        if (sums[q] != Scalar(choose)) {
          return Json{{"p", q}, {"sum", to_json(sums[q])}, {"expected", choose}};
        }
        choose = choose * static_cast<long>(n - q) / static_cast<long>(q + 1);
      }
      return std::nullopt;
    });
  }
}

// Z_nn / prod_i (u_i/c)^n -> (tr(Bhat) tr(B))^n as all u_i grow together.
inline LimitReport partition_limit_check(const Instance& in) {
  const auto& p = in.params;
  const Complex expected = power(in.cfg.tr_Bhat * in.cfg.tr_B, static_cast<long>(p.n())).to_complex();
  const auto base = convert<Complex>(p);
  const auto cfg = convert<Complex>(in.cfg);
  auto sample = [&](double mag) {
    ParamSet<Complex> q = base;
    Complex scale(1);
    for (auto& x : q.u) {
      x = (x == Complex{} ? Complex(1) : x) * mag;
      scale *= power(x / q.c, static_cast<long>(q.n()));
    }
    return partition_expectation(q, cfg) / scale;
  };
  return limit_check(expected, sample);
}

inline void asymptotics(Recorder& rec, InstanceGenerator& gen, std::size_t max_n, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = k % (max_n + 1);
    const bool cx = complex_slot(k);
    const Instance in = gen.instance(n, n, cx);
    const auto& p = in.params;
    const Json inst = to_json(in);
    rec.run("b_leading_coefficient", inst, [&] {
      const auto lead = leading_coefficient<Scalar>(
          [&](const Scalar& u) { return twisted_operator(OperatorKind::B, u, p, in.cfg); }, n);
      const Scalar expect = power(Scalar(1) / p.c, static_cast<long>(n)) * in.cfg.tr_B;
      return zero_or_witness(lead - expect * Matrix<Scalar>::identity(std::size_t{1} << n));
    });
    rec.run("partition_limit", inst, [&] { return limit_witness(partition_limit_check(in)); });
    rec.run("limit_determinant", inst, [&] {
      // det(-beta d_ij + f(v_j, v^j)/h(v_i, v_j)) = chi^n
      const auto k2 = derive_constants(in.cfg);
      Matrix<Scalar> a(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) = kernel_product(Kernel::f, p.v[j], without(p.v, j), Side::left, p.c) / h(p.v[i], p.v[j], p.c);
          if (i == j) a(i, j) -= k2.require("beta");
        }
      }
      return equal_or_witness(det(a), power(k2.require("chi"), static_cast<long>(n)));
    });
  }
}

// Every route to Z agrees exactly. Routes that do not apply to the shape
// (cramer for m != n) are left out.
inline CheckResult all_routes_agree(const Instance& in, const Ceilings& ceil = {}) {
  const auto& p = in.params;
  const auto k = derive_constants(in.cfg);
  const auto spec = LatticeSpec<Scalar>::from_boundary(p, in.cfg);
  std::vector<std::pair<std::string, Scalar>> values;
  values.emplace_back("contraction-trace-rows", partition_trace(spec, Orientation::rows, ceil));
  values.emplace_back("contraction-trace-columns", partition_trace(spec, Orientation::columns, ceil));
  values.emplace_back("contraction-expectation-rows", partition_expectation(p, in.cfg, Orientation::rows, ceil));
  values.emplace_back("contraction-expectation-columns",
                      partition_expectation(p, in.cfg, Orientation::columns, ceil));
  for (IzerginMethod meth : kIzerginMethods) values.emplace_back(method_name(meth), closed_form_Z(p, in.cfg, k, meth));
  if (p.m() == p.n()) values.emplace_back("cramer", cramer_Z(p, in.cfg, k));
  for (const auto& [name, val] : values) {
    if (val != values.front().second) {
      Json all = Json::object();
      for (const auto& [nm, vv] : values) all[nm] = to_json(vv);
      return Json{{"disagreeing_method", name}, {"values", all}};
    }
  }
  return std::nullopt;
}

inline BoundaryConfig<Scalar> domain_wall_boundary() {
  return build_boundary<Scalar>({1, 0}, {0, 1}, {1, 0}, {0, 1});
}

inline void domain_wall(Recorder& rec, InstanceGenerator& gen, std::size_t max_n, std::size_t count) {
  const auto cfg = domain_wall_boundary();
  const auto k = derive_constants(cfg);
  for (std::size_t j = 0; j < count; ++j) {
    const std::size_t n = 1 + j % max_n;
    const auto p = gen.params(n, n, complex_slot(j));
    const Instance in{p, cfg};
    rec.run("domain_wall", to_json(in), [&]() -> CheckResult {
      const Scalar brute = partition_expectation(p, cfg);
      if (n == 1 && brute != Scalar(1)) return Json{{"brute_force", to_json(brute)}, {"expected", "1"}};
      const Scalar expect = lambda2(p.u, p.v, p.c) * ordinary_izergin(p);
      if (auto w = equal_or_witness(brute, expect)) return w;
      for (IzerginMethod meth : kIzerginMethods) {
        if (auto w = equal_or_witness(closed_form_Z(p, cfg, k, meth), brute)) {
          (*w)["method"] = method_name(meth);
          return w;
        }
      }
      return std::nullopt;
    });
  }
}

inline void full_equivalence(Recorder& rec, InstanceGenerator& gen, std::size_t max_size, std::size_t count) {
  const std::size_t side = max_size + 1;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t m = k % side, n = (k / side) % side;
    const Instance in = gen.instance(m, n, complex_slot(k));
    const Json inst = to_json(in);
    rec.run("five_way_equivalence", inst, [&] { return all_routes_agree(in); });
    rec.run("partition_symmetry", inst, [&] {
      auto& rng = gen.engine();
      const ParamSet<Scalar> q{permuted(in.params.u, random_permutation(m, rng)),
                               permuted(in.params.v, random_permutation(n, rng)), in.params.c};
      const auto spec = LatticeSpec<Scalar>::from_boundary(in.params, in.cfg);
      const auto spec_q = LatticeSpec<Scalar>::from_boundary(q, in.cfg);
      if (auto w = equal_or_witness(partition_trace(spec), partition_trace(spec_q))) return w;
      return equal_or_witness(partition_expectation(in.params, in.cfg), partition_expectation(q, in.cfg));
    });
  }
  domain_wall(rec, gen, std::max<std::size_t>(max_size, 1), std::max<std::size_t>(max_size, 1) * 2);
}

}  // namespace oracle

// Suite defaults keep the whole set well under five minutes.
inline std::vector<CheckReport> run_suite(Suite suite, const SuiteOptions& opt = {}) {
  InstanceGenerator gen(opt.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(suite));
  Recorder rec;
  using oracle::pick;
  switch (suite) {
    case Suite::ybe:
      oracle::ybe(rec, gen, pick(opt.instances, 100));
      break;
    case Suite::rtt: {
      const std::size_t n = pick(opt.max_size, 3);
      oracle::rtt(rec, gen, n, pick(opt.instances, 2 * (n + 1)));
      break;
    }
    case Suite::yangian_actions: {
      const std::size_t n = pick(opt.max_size, 3);
      oracle::yangian_actions(rec, gen, n, pick(opt.instances, 4 * (n + 1)));
      break;
    }
    case Suite::modified_actions: {
      const std::size_t n = pick(opt.max_size, 3);
      oracle::modified_actions(rec, gen, n, pick(opt.instances, 3 * (n + 1)));
      break;
    }
    case Suite::mult_actions: {
      const std::size_t n = pick(opt.max_size, 3);
      const std::size_t m = std::min<std::size_t>(n, 2);
      oracle::mult_actions(rec, gen, m, n, pick(opt.instances, (m + 1) * (n + 1)));
      break;
    }
    case Suite::linear_systems: {
      const std::size_t n = pick(opt.max_size, 3);
      oracle::linear_systems(rec, gen, n, pick(opt.instances, 3 * (n + 1)));
      break;
    }
    case Suite::recursion: {
      const std::size_t n = pick(opt.max_size, 3);
      oracle::recursion(rec, gen, n, pick(opt.instances, 3 * (n + 1)));
      break;
    }
    case Suite::offshell: {
      const std::size_t n = pick(opt.max_size, 2);
      oracle::offshell(rec, gen, n, pick(opt.instances, 2 * (n + 1) * (n + 1)));
      break;
    }
    case Suite::izergin_equiv: {
      const std::size_t n = pick(opt.max_size, 5);
      oracle::izergin_equiv(rec, gen, n, pick(opt.instances, (n + 1) * (n + 1)));
      break;
    }
    case Suite::izergin_limits: {
      const std::size_t n = pick(opt.max_size, 3);
      oracle::izergin_limits(rec, gen, n, pick(opt.instances, 2 * n * n));
      break;
    }
    case Suite::cauchy: {
      const std::size_t n = pick(opt.max_size, 4);
      oracle::cauchy(rec, gen, n, pick(opt.instances, 3 * n));
      break;
    }
    case Suite::binomial: {
      const std::size_t n = pick(opt.max_size, 6);
      oracle::binomial(rec, gen, n, pick(opt.instances, n + 1));
      break;
    }
    case Suite::asymptotics: {
      const std::size_t n = pick(opt.max_size, 3);
      oracle::asymptotics(rec, gen, n, pick(opt.instances, 2 * (n + 1)));
      break;
    }
    case Suite::full_equivalence: {
      const std::size_t n = pick(opt.max_size, 3);
      oracle::full_equivalence(rec, gen, n, pick(opt.instances, 2 * (n + 1) * (n + 1)));
      break;
    }
  }
  return rec.take();
}

inline void write_json_lines(std::ostream& os, const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) os << r.to_json().dump() << '\n';
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == CheckStatus::pass; });
}

}  // namespace sixvertex
