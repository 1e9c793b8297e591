#pragma once
// Exact arithmetic for hyperbolic tessellations.
//
// The {p,q} backend represents isometries as 3x3 matrices over the ring
// Z[y]/(Psi_L(y)), where Psi_L is the minimal polynomial of
// gamma = 2 cos(2 pi / L) and L = lcm(2p, 2q). Every quantity the tessellation
// needs — 2 cos(pi/p), 2 cos(pi/q), and all products of reflection matrices —
// lives in this ring, so tile identity is decided by exact integer
// comparisons, never by floating-point proximity.
//
// Psi_L is obtained from the cyclotomic polynomial Phi_L: Phi_L is palindromic
// of even degree 2m for L >= 3, and z^-m Phi_L(z) rewrites in the basis
// z^k + z^-k = D_k(z + 1/z), where D_k is the Chebyshev-like sequence
// D_0 = 2, D_1 = y, D_k = y D_{k-1} - D_{k-2} (so 2cos(k t) = D_k(2cos t)).
// The result is monic of degree m = phi(L)/2 with integer coefficients.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "edenlab/core/error.hpp"
#include "edenlab/core/fmt.hpp"

namespace edenlab {

using bigint = boost::multiprecision::cpp_int;

// ===========================================================================
// Dense integer polynomials (little-endian coefficient order)
// ===========================================================================

struct intpoly {
  std::vector<bigint> c;  ///< c[i] multiplies y^i; no trailing zeros

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  const bigint& coeff(std::size_t i) const {
    static const bigint zero = 0;
    return i < c.size() ? c[i] : zero;
  }
};

inline intpoly poly_from(std::initializer_list<long> coeffs) {
  intpoly p;
  for (long v : coeffs) p.c.emplace_back(v);
  p.normalize();
  return p;
}

inline intpoly poly_add(const intpoly& a, const intpoly& b) {
  intpoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
  r.normalize();
  return r;
}

inline intpoly poly_sub(const intpoly& a, const intpoly& b) {
  intpoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
  r.normalize();
  return r;
}

inline intpoly poly_mul(const intpoly& a, const intpoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  intpoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, bigint(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.normalize();
  return r;
}

inline intpoly poly_scale(const intpoly& a, const bigint& s) {
  intpoly r = a;
  for (auto& x : r.c) x *= s;
  r.normalize();
  return r;
}

/// Exact division a / b for polynomials over Z with monic (or +-1-leading) b.
/// Throws invariant_error if the division leaves a remainder — callers use it
/// only where divisibility is a theorem (cyclotomic factorizations).
inline intpoly poly_divide_exact(intpoly a, const intpoly& b) {
  if (b.is_zero()) throw usage_error("poly_divide_exact: division by zero polynomial");
  const bigint& lead = b.c.back();
  if (lead != 1 && lead != -1)
    throw usage_error("poly_divide_exact: divisor must have leading coefficient +-1");
  intpoly q;
  if (a.degree() < b.degree()) {
    if (!a.is_zero()) throw invariant_error("poly_divide_exact: nonzero remainder");
    return q;
  }
  q.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, bigint(0));
  for (int d = a.degree(); d >= b.degree(); --d) {
    if (a.coeff(static_cast<std::size_t>(d)) == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(d - b.degree());
    const bigint factor = a.c[static_cast<std::size_t>(d)] / lead;
    q.c[shift] = factor;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      a.c[shift + i] -= factor * b.c[i];
  }
  a.normalize();
  if (!a.is_zero()) throw invariant_error("poly_divide_exact: nonzero remainder");
  q.normalize();
  return q;
}

/// Cyclotomic polynomial Phi_n, by the exact-division identity
/// z^n - 1 = prod_{d | n} Phi_d.
inline intpoly cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw usage_error("cyclotomic_polynomial: n must be positive");
  // z^n - 1
  intpoly r;
  r.c.assign(n + 1, bigint(0));
  r.c[0] = -1;
  r.c[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) r = poly_divide_exact(std::move(r), cyclotomic_polynomial(d));
  }
  return r;
}

/// D_k with D_0 = 2, D_1 = y, D_k = y D_{k-1} - D_{k-2};
/// satisfies 2 cos(k t) = D_k(2 cos t).
inline intpoly dickson_polynomial(unsigned k) {
  intpoly prev = poly_from({2});
  if (k == 0) return prev;
  intpoly cur = poly_from({0, 1});
  for (unsigned i = 2; i <= k; ++i) {
    intpoly next = poly_sub(poly_mul(poly_from({0, 1}), cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Minimal polynomial Psi_L of 2 cos(2 pi / L), monic of degree phi(L)/2.
/// Requires L >= 3 (all uses have L = lcm(2p, 2q) >= 12).
inline intpoly real_cyclotomic_minimal_poly(unsigned L) {
  if (L < 3) throw usage_error("real_cyclotomic_minimal_poly: L must be >= 3");
  const intpoly phi = cyclotomic_polynomial(L);
  const int deg = phi.degree();
  if (deg % 2 != 0)
    throw invariant_error("cyclotomic degree phi(L) must be even for L >= 3");
  const std::size_t m = static_cast<std::size_t>(deg) / 2;
  // Palindromicity c_j = c_{2m-j} is what makes the substitution valid.
  for (std::size_t j = 0; j <= static_cast<std::size_t>(deg); ++j) {
    if (phi.coeff(j) != phi.coeff(static_cast<std::size_t>(deg) - j))
      throw invariant_error("cyclotomic polynomial is not palindromic");
  }
  intpoly psi;
  psi.c.assign(1, phi.coeff(m));  // constant term c_m
  for (std::size_t k = 1; k <= m; ++k) {
    psi = poly_add(psi, poly_scale(dickson_polynomial(static_cast<unsigned>(k)),
                                   phi.coeff(m + k)));
  }
  if (psi.degree() != static_cast<int>(m) || psi.c.back() != 1)
    throw invariant_error("Psi_L is not monic of degree phi(L)/2");
  return psi;
}

// ===========================================================================
// The coefficient ring Z[y]/(Psi_L)
// ===========================================================================

class cyclo_ring {
public:
  /// Elements are coefficient vectors of length degree() (little-endian).
  using elem = std::vector<bigint>;

  explicit cyclo_ring(unsigned L)
      : L_(L), psi_(real_cyclotomic_minimal_poly(L).c),
        m_(psi_.size() - 1), gamma_(2.0 * std::cos(2.0 * M_PI / L)) {}

  unsigned level() const { return L_; }
  std::size_t degree() const { return m_; }
  double gamma() const { return gamma_; }

  elem zero() const { return elem(m_, bigint(0)); }

  elem from_int(long v) const {
    elem e = zero();
    e[0] = v;
    return e;
  }

  /// The element representing 2 cos(2 pi k / L), i.e. D_k(gamma) reduced.
  elem two_cos(unsigned k) const {
    const intpoly d = dickson_polynomial(k % L_);
    std::vector<bigint> v = d.c;
    reduce(v);
    v.resize(m_, bigint(0));
    return v;
  }

  elem add(const elem& a, const elem& b) const {
    elem r(m_);
    for (std::size_t i = 0; i < m_; ++i) r[i] = a[i] + b[i];
    return r;
  }

  elem sub(const elem& a, const elem& b) const {
    elem r(m_);
    for (std::size_t i = 0; i < m_; ++i) r[i] = a[i] - b[i];
    return r;
  }

  elem neg(const elem& a) const {
    elem r(m_);
    for (std::size_t i = 0; i < m_; ++i) r[i] = -a[i];
    return r;
  }

  elem mul(const elem& a, const elem& b) const {
    std::vector<bigint> prod(2 * m_ - 1, bigint(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < m_; ++j) {
        if (b[j] == 0) continue;
        prod[i + j] += a[i] * b[j];
      }
    }
    reduce(prod);
    prod.resize(m_);
    return prod;
  }

  bool is_zero(const elem& a) const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }

  bool equal(const elem& a, const elem& b) const { return a == b; }

  /// Canonical total order: lexicographic on the coefficient tuple.
  int compare(const elem& a, const elem& b) const {
    for (std::size_t i = 0; i < m_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  /// Canonical text form "c0;c1;...;c_{m-1}" (decimal).
  std::string serialize(const elem& a) const {
    std::string s;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i) s += ';';
      s += a[i].str();
    }
    return s;
  }

  elem parse(const std::string& s) const {
    const auto parts = split(s, ';');
    if (parts.size() != m_)
      throw usage_error("ring element '" + s + "' must have " + std::to_string(m_) +
                        " coefficients");
    elem e(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      try {
        e[i] = bigint(parts[i]);
      } catch (const std::exception&) {
        throw usage_error("ring element coefficient '" + parts[i] + "' is not an integer");
      }
    }
    return e;
  }

  /// Numeric image under y -> 2 cos(2 pi / L) (diagnostics and rendering only).
  double eval(const elem& a) const {
    double r = 0.0;
    for (std::size_t i = m_; i-- > 0;)
      r = r * gamma_ + a[i].convert_to<double>();
    return r;
  }

private:
  unsigned L_;
  std::vector<bigint> psi_;  // monic, length m_+1
  std::size_t m_;
  double gamma_;

  /// In-place reduction of a (possibly long) coefficient vector mod Psi_L,
  /// using y^m = -(psi_0 + ... + psi_{m-1} y^{m-1}).
  void reduce(std::vector<bigint>& v) const {
    for (std::size_t i = v.size(); i-- > m_;) {
      if (v[i] == 0) continue;
      const bigint f = std::move(v[i]);
      v[i] = 0;
      for (std::size_t j = 0; j < m_; ++j) v[i - m_ + j] -= f * psi_[j];
    }
    if (v.size() < m_) v.resize(m_, bigint(0));
  }
};

// ===========================================================================
// Vectors and matrices over the ring
// ===========================================================================

using ring_vec3 = std::array<cyclo_ring::elem, 3>;
using ring_mat3 = std::array<cyclo_ring::elem, 9>;  // row-major

inline ring_mat3 mat_identity(const cyclo_ring& R) {
  ring_mat3 I{R.from_int(1), R.zero(),     R.zero(),
              R.zero(),     R.from_int(1), R.zero(),
              R.zero(),     R.zero(),     R.from_int(1)};
  return I;
}

inline ring_mat3 mat_mul(const cyclo_ring& R, const ring_mat3& A, const ring_mat3& B) {
  ring_mat3 C;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      cyclo_ring::elem s = R.zero();
      for (int k = 0; k < 3; ++k)
        s = R.add(s, R.mul(A[static_cast<std::size_t>(3 * i + k)],
                           B[static_cast<std::size_t>(3 * k + j)]));
      C[static_cast<std::size_t>(3 * i + j)] = std::move(s);
    }
  }
  return C;
}

inline ring_vec3 mat_vec(const cyclo_ring& R, const ring_mat3& A, const ring_vec3& v) {
  ring_vec3 w;
  for (int i = 0; i < 3; ++i) {
    cyclo_ring::elem s = R.zero();
    for (int k = 0; k < 3; ++k)
      s = R.add(s, R.mul(A[static_cast<std::size_t>(3 * i + k)],
                         v[static_cast<std::size_t>(k)]));
    w[static_cast<std::size_t>(i)] = std::move(s);
  }
  return w;
}

inline ring_mat3 mat_pow(const cyclo_ring& R, ring_mat3 A, unsigned n) {
  ring_mat3 result = mat_identity(R);
  while (n > 0) {
    if (n & 1u) result = mat_mul(R, result, A);
    n >>= 1u;
    if (n) A = mat_mul(R, A, A);
  }
  return result;
}

inline bool mat_equal(const cyclo_ring& R, const ring_mat3& A, const ring_mat3& B) {
  for (std::size_t i = 0; i < 9; ++i)
    if (!R.equal(A[i], B[i])) return false;
  return true;
}

inline bool vec_equal(const cyclo_ring& R, const ring_vec3& a, const ring_vec3& b) {
  for (std::size_t i = 0; i < 3; ++i)
    if (!R.equal(a[i], b[i])) return false;
  return true;
}

inline int compare_vec(const cyclo_ring& R, const ring_vec3& a, const ring_vec3& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (const int c = R.compare(a[i], b[i])) return c;
  }
  return 0;
}

inline int compare_mat(const cyclo_ring& R, const ring_mat3& A, const ring_mat3& B) {
  for (std::size_t i = 0; i < 9; ++i) {
    if (const int c = R.compare(A[i], B[i])) return c;
  }
  return 0;
}

/// Canonical text form of a vector: entries joined with '|'.
inline std::string serialize_vec(const cyclo_ring& R, const ring_vec3& v) {
  return R.serialize(v[0]) + '|' + R.serialize(v[1]) + '|' + R.serialize(v[2]);
}

inline ring_vec3 parse_vec(const cyclo_ring& R, const std::string& s) {
  const auto parts = split(s, '|');
  if (parts.size() != 3)
    throw usage_error("ring vector '" + s + "' must have 3 entries");
  return ring_vec3{R.parse(parts[0]), R.parse(parts[1]), R.parse(parts[2])};
}

inline std::array<double, 3> eval_vec(const cyclo_ring& R, const ring_vec3& v) {
  return {R.eval(v[0]), R.eval(v[1]), R.eval(v[2])};
}

// ===========================================================================
// Coxeter representation of the (2, p, q) triangle group (rotation part)
// ===========================================================================

/// Exact geometric representation of the {p,q} symmetry group.
///
/// Basis: the three simple reflections' normals with Gram matrix
///   B = [ 2, -2cos(pi/p), 0; -2cos(pi/p), 2, -2cos(pi/q); 0, -2cos(pi/q), 2 ],
/// i.e. mirror 1 and 2 meet at the tile center (angle pi/p), mirrors 2 and 3
/// at a tiling vertex (angle pi/q), mirrors 1 and 3 at an edge midpoint
/// (pi/2). Reflections act by r_i(x) = x - B(x, e_i) e_i. The rotations
///   a = r1 r2   (order p, fixes the tile-center direction tile_center)
///   b = r2 r3   (order q, fixes the corner direction corner_base)
///   S = r1 r3   (order 2, the edge flip; equals a*b)
/// generate the rotation subgroup, which acts simply transitively on
/// (tile, edge) flags; tiles are the cosets g<a>, and g * tile_center is a
/// coset invariant used as the canonical tile id.
///
/// tile_center/corner_base are the adjugate columns adj(B) e_3 and adj(B) e_1
/// (det(B)-scaled dual basis vectors), so all coordinates stay in the ring.
/// The constructor verifies the Coxeter relations a^p = b^q = S^2 = I and the
/// fixed-vector identities exactly, and checks hyperbolicity
/// (p-2)(q-2) > 4 up front.
struct coxeter_rep {
  int p, q;
  cyclo_ring ring;
  ring_mat3 gram;          // B
  ring_mat3 adjugate;      // adj(B), with B * adj(B) = det(B) I
  cyclo_ring::elem det;    // det(B); negative under the real embedding
  ring_mat3 rot_a, rot_b, flip_s;
  ring_vec3 tile_center;   // fixed by rot_a
  ring_vec3 corner_base;   // fixed by rot_b

  coxeter_rep(int p_, int q_)
      : p(p_), q(q_), ring(make_level(p_, q_)) {
    const unsigned L = ring.level();
    // 2cos(pi/p) = 2cos(2*pi*(L/2p)/L); L is a multiple of 2p and 2q.
    const auto tp = ring.two_cos(L / (2u * static_cast<unsigned>(p)));
    const auto tq = ring.two_cos(L / (2u * static_cast<unsigned>(q)));
    const auto two = ring.from_int(2);
    const auto zero = ring.zero();

    gram = ring_mat3{two,          ring.neg(tp), zero,
                     ring.neg(tp), two,          ring.neg(tq),
                     zero,         ring.neg(tq), two};

    build_adjugate();

    // r_i = I - E_ii B  (subtract row i of B from row i of the identity).
    std::array<ring_mat3, 3> refl;
    for (int i = 0; i < 3; ++i) {
      refl[static_cast<std::size_t>(i)] = mat_identity(ring);
      for (int k = 0; k < 3; ++k) {
        auto& entry = refl[static_cast<std::size_t>(i)][static_cast<std::size_t>(3 * i + k)];
        entry = ring.sub(entry, gram[static_cast<std::size_t>(3 * i + k)]);
      }
    }
    rot_a = mat_mul(ring, refl[0], refl[1]);
    rot_b = mat_mul(ring, refl[1], refl[2]);
    flip_s = mat_mul(ring, refl[0], refl[2]);

    for (int i = 0; i < 3; ++i) {
      tile_center[static_cast<std::size_t>(i)] = adjugate[static_cast<std::size_t>(3 * i + 2)];
      corner_base[static_cast<std::size_t>(i)] = adjugate[static_cast<std::size_t>(3 * i + 0)];
    }

    verify();
  }

private:
  static unsigned make_level(int p, int q) {
    if (p < 3 || q < 3)
      throw usage_error("{p,q} tessellation needs p >= 3 and q >= 3");
    if ((p - 2) * (q - 2) <= 4)
      throw usage_error("{" + std::to_string(p) + "," + std::to_string(q) +
                        "} is not hyperbolic ((p-2)(q-2) must exceed 4); "
                        "use the lattice backend for Euclidean grids");
    if (p > 12 || q > 12)
      throw limit_error("{p,q} parameters are capped at 12");
    return std::lcm(2u * static_cast<unsigned>(p), 2u * static_cast<unsigned>(q));
  }

  void build_adjugate() {
    const auto& g = gram;
    auto at = [&](int r, int c) -> const cyclo_ring::elem& {
      return g[static_cast<std::size_t>(3 * r + c)];
    };
    auto cof = [&](int r0, int c0, int r1, int c1) {
      return ring.sub(ring.mul(at(r0, c0), at(r1, c1)), ring.mul(at(r0, c1), at(r1, c0)));
    };
    // adj(B)_{ij} = cofactor_{ji}; B is symmetric so adj(B) is symmetric too.
    adjugate = ring_mat3{
        cof(1, 1, 2, 2), ring.neg(cof(0, 1, 2, 2)), cof(0, 1, 1, 2),
        ring.neg(cof(1, 0, 2, 2)), cof(0, 0, 2, 2), ring.neg(cof(0, 0, 1, 2)),
        cof(1, 0, 2, 1), ring.neg(cof(0, 0, 2, 1)), cof(0, 0, 1, 1)};
    det = ring.add(ring.mul(at(0, 0), cof(1, 1, 2, 2)),
                   ring.add(ring.neg(ring.mul(at(0, 1), cof(1, 0, 2, 2))),
                            ring.mul(at(0, 2), cof(1, 0, 2, 1))));
  }

  void verify() const {
    // B adj(B) = det(B) I.
    ring_mat3 prod = mat_mul(ring, gram, adjugate);
    ring_mat3 expected = mat_identity(ring);
    for (std::size_t i = 0; i < 9; ++i) expected[i] = ring.mul(expected[i], det);
    if (!mat_equal(ring, prod, expected))
      throw invariant_error("coxeter_rep: adjugate identity failed");

    // Coxeter relations, exactly.
    const auto I = mat_identity(ring);
    if (!mat_equal(ring, mat_pow(ring, rot_a, static_cast<unsigned>(p)), I))
      throw invariant_error("coxeter_rep: a^p != identity");
    if (!mat_equal(ring, mat_pow(ring, rot_b, static_cast<unsigned>(q)), I))
      throw invariant_error("coxeter_rep: b^q != identity");
    if (!mat_equal(ring, mat_mul(ring, flip_s, flip_s), I))
      throw invariant_error("coxeter_rep: S^2 != identity");
    if (!mat_equal(ring, mat_mul(ring, rot_a, rot_b), flip_s))
      throw invariant_error("coxeter_rep: a b != S");

    // Fixed vectors.
    if (!vec_equal(ring, mat_vec(ring, rot_a, tile_center), tile_center))
      throw invariant_error("coxeter_rep: rotation a does not fix the tile center");
    if (!vec_equal(ring, mat_vec(ring, rot_b, corner_base), corner_base))
      throw invariant_error("coxeter_rep: rotation b does not fix the corner");

    // Real embedding sanity: hyperbolic signature has det(B) < 0, and the
    // fixed directions are timelike (negative norm under B).
    if (!(ring.eval(det) < 0.0))
      throw invariant_error("coxeter_rep: det(B) is not negative under the real embedding");
    for (const auto* v : {&tile_center, &corner_base}) {
      cyclo_ring::elem norm = ring.zero();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          norm = ring.add(norm, ring.mul((*v)[static_cast<std::size_t>(i)],
                                         ring.mul(gram[static_cast<std::size_t>(3 * i + j)],
                                                  (*v)[static_cast<std::size_t>(j)])));
      if (!(ring.eval(norm) < 0.0))
        throw invariant_error("coxeter_rep: fixed direction is not timelike");
    }
  }
};

} // namespace edenlab
