#include "whopf/semisimplicity.hpp"

#include "whopf/error.hpp"

namespace whopf {

namespace {

// p(x) with the constant term read as e, the unit of the ambient block.
template <class S>
Vec<S> evaluate(const WeakHopfAlgebra<S>& h, const std::vector<S>& poly, const Vec<S>& x, const Vec<S>& e) {
  Vec<S> acc = Vec<S>::Zero(h.dim());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = h.mul(acc, x) + *it * e;
  return acc;
}

// Minimal polynomial (lowest degree first, monic) of x inside the algebra with unit e.
template <class S>
std::vector<S> minimal_polynomial(const WeakHopfAlgebra<S>& h, const Vec<S>& x, const Vec<S>& e) {
  std::vector<Vec<S>> powers{e};
  while (true) {
    const Vec<S> next = h.mul(powers.back(), x);
    Mat<S> basis(h.dim(), static_cast<Eigen::Index>(powers.size()));
    for (std::size_t i = 0; i < powers.size(); ++i) basis.col(static_cast<Eigen::Index>(i)) = powers[i];
    if (auto sol = solve<S>(basis, next)) {
      std::vector<S> poly;
      for (Eigen::Index i = 0; i < sol->particular.size(); ++i) poly.push_back(-sol->particular(i));
      poly.push_back(S(1));
      return poly;
    }
    powers.push_back(next);
  }
}

// Divides by (X - r); returns the quotient.
template <class S>
std::vector<S> deflate(const std::vector<S>& poly, const S& r) {
  std::vector<S> q(poly.size() - 1, S(0));
  S carry(0);
  for (std::size_t i = poly.size() - 1; i-- > 0;) {
    carry = poly[i + 1] + carry * r;
    q[i] = carry;
  }
  return q;
}

template <class S>
S evaluate_scalar(const std::vector<S>& poly, const S& x) {
  S acc(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class S>
Subspace<S> subalgebra_center(const WeakHopfAlgebra<S>& h, const Subspace<S>& a) {
  const int n = h.dim();
  const Mat<S> basis = a.columns();
  const int d = a.dim();
  Mat<S> system(static_cast<Eigen::Index>(n) * d, d);
  for (int c = 0; c < d; ++c)
    for (int j = 0; j < d; ++j)
      system.block(static_cast<Eigen::Index>(j) * n, c, n, 1) =
          h.mul(basis.col(c), basis.col(j)) - h.mul(basis.col(j), basis.col(c));
  return Subspace<S>::span_columns(Mat<S>(basis * kernel(system).columns()));
}

template <class S>
bool all_nonzero(const std::vector<BlockTrace<S>>& blocks) {
  for (const auto& b : blocks)
    if (is_zero(b.trace)) return false;
  return true;
}

template <class S>
std::optional<std::vector<BlockTrace<S>>> block_traces(const WeakHopfAlgebra<S>& h, const Subspace<S>& a,
                                                       const std::string& prefix, bool left, bool right) {
  std::vector<Vec<S>> idems;
  try {
    idems = primitive_idempotents(h, a);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NonSplit) return std::nullopt;
    throw;
  }
  std::vector<BlockTrace<S>> out;
  const int n = h.dim();
  for (std::size_t i = 0; i < idems.size(); ++i) {
    Mat<S> proj = Mat<S>::Identity(n, n);
    if (left) proj = h.left_mult(idems[i]) * proj;
    if (right) proj = h.right_mult(idems[i]) * proj;
    out.push_back({prefix + std::to_string(i + 1), idems[i], compressed_trace_s2(h, proj)});
  }
  return out;
}

}  // namespace

template <class S>
std::vector<Vec<S>> primitive_idempotents(const WeakHopfAlgebra<S>& h, const Subspace<S>& a) {
  const Mat<S> basis = a.columns();
  const int d = a.dim();
  if (!a.contains(h.unit())) throw Error(ErrorCode::PreconditionUnmet, "subalgebra does not contain 1");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j)
      if (h.mul(basis.col(i), basis.col(j)) != h.mul(basis.col(j), basis.col(i)))
        throw Error(ErrorCode::PreconditionUnmet, "subalgebra is not commutative");
  std::vector<Vec<S>> idems{h.unit()};
  for (int b = 0; b < d; ++b) {
    std::vector<Vec<S>> next;
    for (const Vec<S>& e : idems) {
      const Vec<S> x = h.mul(e, basis.col(b));
      const std::vector<S> poly = minimal_polynomial(h, x, e);
      if (poly.size() == 2) {
        next.push_back(e);
        continue;
      }
      Vec<S> rest = e;
      for (const S& r : FieldOps<S>::roots(poly, h.field())) {
        const std::vector<S> q = deflate(poly, r);
        const S qr = evaluate_scalar(q, r);
        if (is_zero(qr)) throw Error(ErrorCode::NonSplit, "minimal polynomial has a repeated root");
        const Vec<S> part = evaluate(h, q, x, e) * (S(1) / qr);
        next.push_back(part);
        rest -= part;
      }
      if (!is_zero_vector(rest)) next.push_back(rest);
    }
    idems = std::move(next);
  }
  // Primitive: e a is one-dimensional for every idempotent e.
  for (const Vec<S>& e : idems)
    for (int b = 0; b < d; ++b) {
      const Vec<S> eb = h.mul(e, basis.col(b));
      Mat<S> pair(h.dim(), 2);
      pair << e, eb;
      if (rank(pair) != 1) throw Error(ErrorCode::NonSplit, "a minimal polynomial does not split over the field");
    }
  return idems;
}

template <class S>
Connectedness connectedness(const WeakHopfAlgebra<S>& h) {
  Connectedness c;
  c.center_source_dim = counital_subalgebras(h).ZcapHs.dim();
  c.dual_center_source_dim = counital_subalgebras(dualize(h)).ZcapHs.dim();
  c.connected = c.center_source_dim == 1;
  c.biconnected = c.connected && c.dual_center_source_dim == 1;
  return c;
}

template <class S>
S compressed_trace_s2(const WeakHopfAlgebra<S>& h, const Mat<S>& projection) {
  const Mat<S> s2 = h.antipode() * h.antipode();
  return trace<S>(projection * s2 * projection);
}

template <class S>
TraceS2<S> trace_s2(const WeakHopfAlgebra<S>& h, const DualPair<S>& pair) {
  const Mat<S> s2 = h.antipode() * h.antipode();
  const Vec<S> es_lambda = counital_maps(dualize(h)).eps_s * pair.lambda;
  const Vec<S> es_ell = counital_maps(h).eps_s * pair.ell;
  return {trace<S>(s2), es_lambda.dot(es_ell)};
}

template <class S>
TraceReport<S> semisimplicity_report(const WeakHopfAlgebra<S>& h) {
  TraceReport<S> r;
  const WeakHopfAlgebra<S> hd = dualize(h);
  const auto subs = counital_subalgebras(h);
  const auto dsubs = counital_subalgebras(hd);
  r.tr_s2_direct = trace<S>(Mat<S>(h.antipode() * h.antipode()));
  try {
    r.tr_s2_formula = trace_s2(h, find_dual_pair(h)).formula;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotFrobenius && e.code() != ErrorCode::SearchExhausted) throw;
  }
  r.source_blocks = block_traces(h, subs.ZcapHs, "p", true, false);
  r.dual_blocks = block_traces(hd, dsubs.HtCapHs, "pi", false, true);
  r.min_blocks = block_traces(h, subalgebra_center(h, subs.Hmin), "q", true, true);
  r.connectivity = connectedness(h);
  r.regular = is_regular(h);
  r.dual_regular = is_regular(hd);
  r.semisimple = maschke(h).semisimple;
  r.cosemisimple = maschke(hd).semisimple;
  r.trace_form_agrees = trace_form_semisimple(h) == r.semisimple && trace_form_semisimple(hd) == r.cosemisimple;

  const bool tr_nonzero = !is_zero(r.tr_s2_direct);
  auto blocks_hypothesis = [&](const auto& blocks) -> std::optional<bool> {
    if (!r.regular) return false;
    if (!blocks) return std::nullopt;
    return all_nonzero(*blocks);
  };
  r.implications.push_back({"nonzero_block_traces_imply_semisimple", blocks_hypothesis(r.source_blocks), r.semisimple});
  r.implications.push_back({"nonzero_dual_block_traces_imply_semisimple", blocks_hypothesis(r.dual_blocks), r.semisimple});
  r.implications.push_back({"connected_nonzero_trace_implies_semisimple",
                            r.regular && r.connectivity.connected && tr_nonzero, r.semisimple});
  r.implications.push_back({"biconnected_nonzero_trace_implies_semisimple_and_cosemisimple",
                            r.regular && r.connectivity.biconnected && tr_nonzero, r.semisimple && r.cosemisimple});
  {
    Implication pHp{"semisimple_implies_nonzero_min_block_traces", std::nullopt, false};
    if (r.min_blocks) {
      pHp.hypothesis = r.semisimple && r.regular && r.dual_regular;
      pHp.conclusion = all_nonzero(*r.min_blocks);
    }
    r.implications.push_back(pHp);
  }
  r.implications.push_back({"semisimple_with_equal_bases_implies_cosemisimple",
                            r.semisimple && subs.Ht == subs.Hs, r.cosemisimple});
  return r;
}

template <class S>
ValidationReport coinciding_bases_check(const WeakHopfAlgebra<S>& h) {
  const auto subs = counital_subalgebras(h);
  if (!(subs.Ht == subs.Hs)) throw Error(ErrorCode::PreconditionUnmet, "H_t and H_s differ");
  if (!maschke(h).semisimple) throw Error(ErrorCode::PreconditionUnmet, "H is not semisimple");
  const WeakHopfAlgebra<S> hd = dualize(h);
  ValidationReport rep;
  AxiomCheck dual_ss("dual_semisimple");
  dual_ss.passed = maschke(hd).semisimple;
  if (!dual_ss.passed) dual_ss.residual = "no normalized left integral in H*";
  AxiomCheck inv("eps_t_lambda_invertible_central");
  const DualPair<S> pair = find_dual_pair(h);
  const Vec<S> x = counital_maps(hd).eps_t * pair.lambda;
  const auto dsubs = counital_subalgebras(hd);
  if (!dsubs.ZcapHs.contains(x)) {
    inv.passed = false;
    inv.residual = "eps_t(lambda) is not in Z(H*) cap H*_s";
  } else if (!hd.is_invertible(x)) {
    inv.passed = false;
    inv.residual = "eps_t(lambda) is not invertible";
  }
  rep.checks = {dual_ss, inv};
  return rep;
}

#define WHOPF_INSTANTIATE_SEMISIMPLICITY(S)                                                     \
  template std::vector<Vec<S>> primitive_idempotents<S>(const WeakHopfAlgebra<S>&, const Subspace<S>&); \
  template Connectedness connectedness<S>(const WeakHopfAlgebra<S>&);                           \
  template S compressed_trace_s2<S>(const WeakHopfAlgebra<S>&, const Mat<S>&);                  \
  template TraceS2<S> trace_s2<S>(const WeakHopfAlgebra<S>&, const DualPair<S>&);               \
  template TraceReport<S> semisimplicity_report<S>(const WeakHopfAlgebra<S>&);                  \
  template ValidationReport coinciding_bases_check<S>(const WeakHopfAlgebra<S>&);

WHOPF_INSTANTIATE_SEMISIMPLICITY(Rational)
WHOPF_INSTANTIATE_SEMISIMPLICITY(Cyclotomic)

}  // namespace whopf
