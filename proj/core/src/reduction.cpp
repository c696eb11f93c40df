#include <algorithm>
#include <numeric>
#include <set>

#include "collapse_lab/error.hpp"
#include "collapse_lab/qarith.hpp"
#include "collapse_lab/ssclass.hpp"

namespace clab {

namespace {

constexpr std::size_t kFallbackPairs = 256;

bool is_scalar(const Matrix& m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j ? m(i, j) != 0 : m(i, i) != m(0, 0)) return false;
  return true;
}

// Copy `blk` into `m` with its top-left corner at (r, c).
void place(Matrix& m, const Matrix& blk, int r, int c) {
  for (int i = 0; i < blk.dim(); ++i)
    for (int j = 0; j < blk.dim(); ++j) m(r + i, c + j) = blk(i, j);
}

std::vector<Field::Elem> vec_of(const Field& f, std::uint64_t k, int len) {
  std::vector<Field::Elem> v(len);
  for (int i = 0; i < len; ++i) {
    v[i] = static_cast<Field::Elem>(k % f.q());
    k /= f.q();
  }
  return v;
}

std::uint64_t qpow_checked(std::uint64_t q, int e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= q;
    if (r > cap) throw CoverageGap("reduction_witness: family exceeds the size cap");
  }
  return r;
}

// Scalars lambda with lambda^k = 1.
std::vector<Field::Elem> roots_of_unity(const Field& f, std::uint64_t k) {
  std::vector<Field::Elem> out;
  for (Field::Elem x = 1; x < f.q(); ++x)
    if (f.pow(x, k) == f.one()) out.push_back(x);
  return out;
}

struct Builder {
  FieldPtr f;
  int n;
  std::uint64_t cap;
  CtxPtr lctx, pctx;
  Matrix normalized;

  ClassRef cref() const { return ClassRef::semisimple(pctx, normalized); }

  // The family as a type-C structure with H = <R u S>; if that fails, a pair
  // r in R, s in S with R' = O_r^{<r,s>}, S' = O_s^{<r,s>}.
  ReductionResult finish_family(ReductionCase tag, std::vector<Matrix> R, std::vector<Matrix> S, const Matrix& r,
                                const Matrix& s) const {
    ReductionResult out;
    out.tag = tag;
    out.normalized = normalized;
    out.ctx = pctx;
    std::set<Matrix> images;
    for (const auto& m : R) images.insert(pctx->canon(m));
    for (const auto& m : S) images.insert(pctx->canon(m));
    const bool injective = images.size() == R.size() + S.size();
    out.family_r = std::move(R);
    out.family_s = std::move(S);
    const ClassRef c = cref();

    if (injective) {
      WitnessC w;
      w.generators.assign(images.begin(), images.end());
      w.r = pctx->canon(r);
      w.s = pctx->canon(s);
      try {
        w.orbit_r = conj_class(pctx, w.generators, w.r, cap).size();
        w.orbit_s = conj_class(pctx, w.generators, w.s, cap).size();
        if (verify_witness(w, c, cap)) {
          w.subgroup_order = closure(pctx, w.generators, cap).size();
          out.witness = std::move(w);
          return out;
        }
      } catch (const CapExceeded&) {
      }
    }
    std::size_t tried = 0;
    for (const auto& a : out.family_r) {
      for (const auto& b : out.family_s) {
        const Matrix pa = pctx->canon(a), pb = pctx->canon(b);
        if (pctx->commute(pa, pb)) continue;
        if (++tried > kFallbackPairs) break;
        WitnessC w;
        w.generators = {pa, pb};
        w.r = pa;
        w.s = pb;
        try {
          w.orbit_r = conj_class(pctx, w.generators, pa, cap).size();
          w.orbit_s = conj_class(pctx, w.generators, pb, cap).size();
          if (!verify_witness(w, c, cap)) continue;
          w.subgroup_order = closure(pctx, w.generators, cap).size();
        } catch (const CapExceeded&) {
          continue;
        }
        out.pair_fallback = true;
        out.witness = std::move(w);
        return out;
      }
      if (tried > kFallbackPairs) break;
    }
    throw CoverageGap("reduction_witness: " + to_string(tag) + " family yields no verified type C witness");
  }

  ReductionResult finish_pair_d(ReductionCase tag, const Matrix& r, const Matrix& s) const {
    WitnessD w;
    w.r = pctx->canon(r);
    w.s = pctx->canon(s);
    w.orbit_r = conj_class(pctx, {w.r, w.s}, w.r, cap).size();
    w.orbit_s = conj_class(pctx, {w.r, w.s}, w.s, cap).size();
    try {
      w.subgroup_order = closure(pctx, {w.r, w.s}, cap).size();
    } catch (const CapExceeded&) {
      w.subgroup_order = 0;
    }
    if (!verify_witness(w, cref(), cap))
      throw CoverageGap("reduction_witness: " + to_string(tag) + " pair is not a type D witness");
    ReductionResult out;
    out.tag = tag;
    out.normalized = normalized;
    out.ctx = pctx;
    out.witness = std::move(w);
    return out;
  }

  std::vector<Matrix> sl_class(const Matrix& a) const {
    const int d = a.dim();
    const auto ctx = GroupContext::linear(f, d);
    return conj_class(ctx, sl_generators(*f, d), a, cap).elements();
  }

  // Least (x, y) in the class list with xy != yx.
  std::pair<Matrix, Matrix> noncommuting_pair(const std::vector<Matrix>& X, const std::vector<Matrix>& Y) const {
    const Field& F = *f;
    for (const auto& x : X)
      for (const auto& y : Y)
        if (mat_mul(F, x, y) != mat_mul(F, y, x)) return {x, y};
    throw CoverageGap("reduction_witness: block class is abelian");
  }

  // {diag(E, tail) : E in blocks} as full matrices.
  std::vector<Matrix> with_tail(const std::vector<Matrix>& heads, const Matrix& tail) const {
    std::vector<Matrix> out;
    for (const auto& h : heads) out.push_back(block_diag({h, tail}));
    return out;
  }
};

Matrix gl_tail(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix(0);
  return block_diag(blocks);
}

}  // namespace

ReductionResult reduction_witness(const FieldPtr& f, const Matrix& T, std::uint64_t cap) {
  const Field& F = *f;
  const int n = T.dim();
  if (n < 2) throw InvalidArgument("reduction_witness: n must be at least 2");
  if (det(F, T) != F.one()) throw InvalidArgument("reduction_witness: determinant is not 1");
  if (!is_semisimple_matrix(F, T)) throw InvalidArgument("reduction_witness: element is not semisimple");
  if (is_scalar(T)) throw InvalidArgument("reduction_witness: element is central");
  const auto fac = poly_factor(F, char_poly(F, T));
  if (fac.size() == 1 && fac[0].second == 1) throw InvalidArgument("reduction_witness: element is irreducible");
  const std::uint64_t q = F.q();

  std::vector<Field::Elem> eig;  // eigenvalues with multiplicity
  std::vector<Poly> nonlinear;   // irreducible blocks of degree > 1, canonical order
  for (const auto& [p, mult] : fac)
    for (int k = 0; k < mult; ++k) {
      if (p.degree() == 1)
        eig.push_back(F.neg(p.coeff(0)));
      else
        nonlinear.push_back(p);
    }

  Builder B{f, n, cap, GroupContext::linear(f, n), GroupContext::projective(f, n), Matrix()};

  // Diagonal.
  if (nonlinear.empty()) {
    // Put two distinct eigenvalues first.
    auto it = std::find_if(eig.begin(), eig.end(), [&](auto x) { return x != eig[0]; });
    std::iter_swap(eig.begin() + 1, it);
    Matrix D(n);
    for (int i = 0; i < n; ++i) D(i, i) = eig[i];
    B.normalized = D;
    const Field::Elem a1 = eig[0], a2 = eig[1];
    std::vector<Matrix> X1, X2;
    for (Field::Elem c = 0; c < q; ++c) {
      Matrix r = D, s = D;
      r(0, 1) = c;
      s(0, 0) = a2;
      s(1, 1) = a1;
      s(0, 1) = c;
      X1.push_back(r);
      X2.push_back(s);
    }
    if (n > 2 || q % 2 == 0) return B.finish_family(ReductionCase::Diagonal, X1, X2, X1[1], X2[0]);
    if (F.pow(a1, 4) != F.one()) {
      auto out = B.finish_pair_d(ReductionCase::Diagonal, X1[1], X2[0]);
      out.family_r = X1;
      out.family_s = X2;
      return out;
    }
    // pi(T) is an involution: search its PSL class.
    auto cls = std::make_shared<const ConjClass>(conj_class(B.pctx, sl_generators(F, 2), B.pctx->canon(D), cap));
    BoundsRecord rec;
    SearchBounds sb;
    sb.group_cap = cap;
    if (auto w = check_type_d(Rack::from_class(cls), sb, rec)) {
      ReductionResult out;
      out.tag = ReductionCase::Diagonal;
      out.normalized = D;
      out.ctx = B.pctx;
      out.witness = *w;
      if (verify_witness(*w, ClassRef(cls), cap)) return out;
    }
    throw CoverageGap("reduction_witness: involution class of PSL_2(" + std::to_string(q) +
                      ") has no type D witness");
  }

  // Block with an eigenvalue: T ~ diag(a, Bk, C).
  if (!eig.empty()) {
    const Field::Elem a = eig[0];
    const Matrix Bk = companion(F, nonlinear[0]);
    const int e = Bk.dim();
    std::vector<Matrix> rest;
    for (std::size_t i = 1; i < eig.size(); ++i) rest.push_back(Matrix::scalar(1, eig[i]));
    for (std::size_t i = 1; i < nonlinear.size(); ++i) rest.push_back(companion(F, nonlinear[i]));
    std::vector<Matrix> blocks{Matrix::scalar(1, a), Bk};
    blocks.insert(blocks.end(), rest.begin(), rest.end());
    B.normalized = block_diag(blocks);
    blocks[1] = mat_pow(F, Bk, q);
    const Matrix Tq = block_diag(blocks);
    const std::uint64_t count = qpow_checked(q, e, cap);
    std::vector<Matrix> X1, X2;
    for (std::uint64_t k = 0; k < count; ++k) {
      const auto v = vec_of(F, k, e);
      Matrix r = B.normalized, s = Tq;
      for (int j = 0; j < e; ++j) r(0, 1 + j) = s(0, 1 + j) = v[j];
      X1.push_back(r);
      X2.push_back(s);
    }
    // r = r_{e_1}: index 1 is the vector (1, 0, ..., 0).
    return B.finish_family(ReductionCase::BlockWithEigenvalue, X1, X2, X1[1], X2[0]);
  }

  std::vector<Matrix> comps;
  for (const auto& p : nonlinear) comps.push_back(companion(F, p));

  // At least three irreducible blocks.
  if (comps.size() >= 3) {
    const Matrix& A = comps[0];
    const Matrix& Bk = comps[1];
    const Matrix C = gl_tail(std::vector<Matrix>(comps.begin() + 2, comps.end()));
    B.normalized = block_diag(comps);
    const Matrix Bq = mat_pow(F, Bk, q);
    const auto OA = B.sl_class(A);
    const Matrix tailR = block_diag({Bk, C}), tailS = block_diag({Bq, C});
    const auto [x, y] = B.noncommuting_pair(OA, OA);
    return B.finish_family(ReductionCase::ThreeOrMoreBlocks, B.with_tail(OA, tailR), B.with_tail(OA, tailS),
                           block_diag({x, tailR}), block_diag({y, tailS}));
  }

  // Two irreducible blocks.
  Matrix A = comps[0], Bk = comps[1];
  auto frob_scalar = [&](const Matrix& X) {
    // X^q in Z(SL_k) X
    const Matrix Xq = mat_pow(F, X, q);
    for (auto lam : roots_of_unity(F, X.dim()))
      if (mat_scale(F, X, lam) == Xq) return true;
    return false;
  };
  auto two_block_family = [&](ReductionCase tag, const Matrix& A1, const Matrix& B1) {
    B.normalized = block_diag({A1, B1});
    const Matrix Bq = mat_pow(F, B1, q);
    const auto OA = B.sl_class(A1);
    const auto [x, y] = B.noncommuting_pair(OA, OA);
    return B.finish_family(tag, B.with_tail(OA, B1), B.with_tail(OA, Bq), block_diag({x, B1}),
                           block_diag({y, Bq}));
  };
  if (!frob_scalar(Bk)) return two_block_family(ReductionCase::TwoBlocksFrobenius, A, Bk);
  if (!frob_scalar(A)) return two_block_family(ReductionCase::TwoBlocksFrobenius, Bk, A);

  const int d = A.dim(), e = Bk.dim();
  const std::uint64_t l = std::gcd(std::gcd(q - 1, std::uint64_t(d)), std::uint64_t(e));
  if (l != std::uint64_t(e)) return two_block_family(ReductionCase::TwoBlocksGcd, A, Bk);
  if (l != std::uint64_t(d)) return two_block_family(ReductionCase::TwoBlocksGcd, Bk, A);

  // d = e from here on.
  const Poly chiA = char_poly(F, A), chiB = char_poly(F, Bk);
  bool in_zoa = false;
  for (auto lam : roots_of_unity(F, d))
    if (char_poly(F, mat_scale(F, Bk, lam)) == chiA) in_zoa = true;
  if (!in_zoa) {
    // Replace B by a conjugate in F_q[A], so that it commutes with A.
    const std::uint64_t count = qpow_checked(q, d, cap);
    std::optional<Matrix> Bc;
    for (std::uint64_t k = 0; k < count && !Bc; ++k) {
      const auto c = vec_of(F, k, d);
      const Matrix P = poly_eval_matrix(F, Poly(c), A);
      if (char_poly(F, P) == chiB) Bc = P;
    }
    if (!Bc) throw CoverageGap("reduction_witness: no conjugate of B commutes with A");
    B.normalized = block_diag({A, *Bc});
    const auto OA = B.sl_class(A);
    const auto OB = B.sl_class(*Bc);
    const auto [D, E] = B.noncommuting_pair(OA, OB);
    return B.finish_family(ReductionCase::TwoBlocksNotConjugate, B.with_tail(OA, *Bc), B.with_tail(OB, A),
                           block_diag({D, *Bc}), block_diag({E, A}));
  }
  if (chiA != chiB) throw CoverageGap("reduction_witness: conjugate-blocks case with distinct block classes");

  B.normalized = block_diag({A, A});
  if (d > 2) {
    const Matrix Aq = mat_pow(F, A, q);
    std::optional<Field::Elem> mu;
    for (auto lam : roots_of_unity(F, d))
      if (mat_scale(F, A, lam) == Aq && F.elem_order(lam) == std::uint64_t(d)) mu = lam;
    if (!mu) throw CoverageGap("reduction_witness: A^q is not a primitive root multiple of A");
    for (int a = 1; a < d; ++a)
      for (int b = 1; b < d; ++b) {
        if (a == b || F.pow(*mu, 2 * (a + b)) == F.one()) continue;
        const Matrix muA = mat_scale(F, A, F.pow(*mu, a));
        Matrix r = block_diag({A, muA});
        place(r, mat_sub(F, muA, A), 0, d);
        const Matrix s = block_diag({A, mat_scale(F, A, F.pow(*mu, b))});
        return B.finish_pair_d(ReductionCase::TwoEqualBlocksRoot, r, s);
      }
    throw CoverageGap("reduction_witness: no exponents a != b with mu^{2(a+b)} != 1");
  }
  if (q != 3) {
    const Field::Elem z = F.multiplicative_generator(), zi = F.inv(z), one = F.one(), m1 = F.neg(one);
    const Matrix r{{0, F.neg(z), 0, 0}, {zi, 0, 0, 0}, {0, 0, 0, one}, {0, 0, m1, 0}};
    const Matrix s{{0, 0, 0, one}, {0, 0, one, 0}, {0, m1, 0, 0}, {m1, 0, 0, 0}};
    return B.finish_pair_d(ReductionCase::TwoEqualBlocksOrder2, r, s);
  }
  const Matrix v{{1, 0, 0, 1}, {1, 1, 2, 1}, {1, 1, 0, 0}, {0, 0, 0, 1}};
  const Matrix s = B.lctx->conj(v, B.normalized);
  return B.finish_pair_d(ReductionCase::SL4Q3, B.normalized, s);
}

}  // namespace clab
