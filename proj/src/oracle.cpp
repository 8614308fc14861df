// Copyright 2026 The fermisim developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fermisim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "fermisim/compiler.hpp"
#include "fermisim/jordan_wigner.hpp"

namespace fermisim {

DenseMatrix DenseMatrix::zero(std::size_t dim) {
  DenseMatrix m;
  m.dim = dim;
  m.data.assign(dim * dim, cdouble(0.0, 0.0));
  return m;
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m = zero(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = cdouble(1.0, 0.0);
  return m;
}

DenseMatrix DenseMatrix::dagger() const {
  DenseMatrix m = zero(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m.at(c, r) = std::conj(at(r, c));
  return m;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
  if (rhs.dim != dim) throw config_error("matrix dimension mismatch");
  DenseMatrix out = zero(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t k = 0; k < dim; ++k) {
      const cdouble v = at(r, k);
      if (v == cdouble(0.0, 0.0)) continue;
      const cdouble* row = rhs.data.data() + k * dim;
      cdouble* dst = out.data.data() + r * dim;
      for (std::size_t c = 0; c < dim; ++c) dst[c] += v * row[c];
    }
  return out;
}

std::vector<cdouble> DenseMatrix::apply(const std::vector<cdouble>& v) const {
  if (v.size() != dim) throw config_error("matrix/vector dimension mismatch");
  std::vector<cdouble> out(dim, cdouble(0.0, 0.0));
  for (std::size_t r = 0; r < dim; ++r) {
    cdouble acc(0.0, 0.0);
    const cdouble* row = data.data() + r * dim;
    for (std::size_t c = 0; c < dim; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i)
    worst = std::max(worst, std::abs(data[i] - other.data[i]));
  return worst;
}

double DenseMatrix::max_abs_imag() const {
  double worst = 0.0;
  for (const auto& v : data) worst = std::max(worst, std::abs(v.imag()));
  return worst;
}

bool DenseMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r; c < dim; ++c)
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
  return true;
}

namespace {

constexpr int kFockCap = 14;
constexpr int kPauliCap = 12;
constexpr int kGateCap = 8;
constexpr std::size_t kEigenCap = 4096;

/// Applies one ladder operator to an occupation bitstring (occupied =
/// bit 0).  Returns false when Pauli-blocked; otherwise updates the index
/// and sign in place.  The phase is the product of Z eigenvalues of the
/// qubits below the level, matching the Jordan-Wigner string convention.
bool apply_ladder_op(const LadderOp& op, int n, std::uint64_t& index,
                     double& sign) {
  const std::uint64_t mask = 1ULL << (n - op.level);
  const bool occupied = (index & mask) == 0;
  if (op.kind == LadderKind::Create) {
    if (occupied) return false;
  } else {
    if (!occupied) return false;
  }
  // Bits above position (n - level) belong to levels k < level; a set bit
  // is an empty level with Z eigenvalue -1.
  const std::uint64_t above = index >> (n - op.level + 1);
  if (std::popcount(above) & 1) sign = -sign;
  index ^= mask;
  return true;
}

}  // namespace

DenseMatrix fock_matrix(const FermionHamiltonian& h) {
  return fock_matrix(h.ladder_terms(), h.n_levels, h.e0);
}

DenseMatrix fock_matrix(const std::vector<LadderTerm>& terms, int n_levels,
                        double e0) {
  const int n = n_levels;
  if (n < 1) throw config_error("empty model");
  if (n > kFockCap)
    throw resource_error("fock_matrix capped at " + std::to_string(kFockCap) +
                         " levels");
  const std::size_t dim = 1ULL << n;
  DenseMatrix m = DenseMatrix::zero(dim);
  if (e0 != 0.0)
    for (std::size_t x = 0; x < dim; ++x) m.at(x, x) += e0;

  for (const auto& term : terms) {
    for (std::uint64_t x = 0; x < dim; ++x) {
      std::uint64_t y = x;
      double sign = 1.0;
      bool alive = true;
      // Rightmost factor acts first.
      for (auto it = term.ops.rbegin(); it != term.ops.rend(); ++it) {
        if (!apply_ladder_op(*it, n, y, sign)) {
          alive = false;
          break;
        }
      }
      if (alive) m.at(y, x) += sign * term.coeff;
    }
  }
  return m;
}

namespace {

void accumulate_string(DenseMatrix& m, int n, const LetterMap& letters,
                       cdouble coeff) {
  std::uint64_t flip = 0;
  std::uint64_t ymask = 0;
  std::uint64_t zmask = 0;
  int ny = 0;
  for (const auto& [q, p] : letters) {
    const std::uint64_t mask = 1ULL << (n - q);
    if (p == Pauli::X) {
      flip |= mask;
    } else if (p == Pauli::Y) {
      flip |= mask;
      ymask |= mask;
      ++ny;
    } else {
      zmask |= mask;
    }
  }
  static const cdouble kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cdouble w = kIPow[ny & 3];
  const std::size_t dim = m.dim;
  for (std::uint64_t x = 0; x < dim; ++x) {
    const double s =
        (std::popcount(x & (ymask | zmask)) & 1) ? -1.0 : 1.0;
    m.at(x ^ flip, x) += coeff * w * s;
  }
}

}  // namespace

DenseMatrix pauli_matrix(const PauliString& s) {
  if (s.n_qubits > kPauliCap)
    throw resource_error("pauli_matrix capped at " +
                         std::to_string(kPauliCap) + " qubits");
  DenseMatrix m = DenseMatrix::zero(1ULL << s.n_qubits);
  accumulate_string(m, s.n_qubits, s.letters, s.coeff);
  return m;
}

DenseMatrix pauli_matrix(const PauliHamiltonian& h) {
  if (h.n_qubits > kPauliCap)
    throw resource_error("pauli_matrix capped at " +
                         std::to_string(kPauliCap) + " qubits");
  const std::size_t dim = 1ULL << h.n_qubits;
  DenseMatrix m = DenseMatrix::zero(dim);
  if (h.constant != 0.0)
    for (std::size_t x = 0; x < dim; ++x) m.at(x, x) += h.constant;
  for (const auto& term : h.terms)
    accumulate_string(m, h.n_qubits, term.letters, cdouble(term.coeff, 0.0));
  return m;
}

namespace {

/// Applies one gate to a column vector; an implementation independent of
/// the statevector engine so the two can be checked against each other.
void apply_op_to_column(cdouble* col, int n, const GateOp& op) {
  const std::size_t dim = 1ULL << n;
  const auto mask_of = [&](int q) { return 1ULL << (n - q); };
  switch (op.kind) {
    case GateOp::Kind::Rot: {
      const double c = std::cos(op.angle);
      const double s = std::sin(op.angle);
      cdouble m00, m01, m10, m11;
      if (op.axis == Axis::X) {
        m00 = {c, 0}; m01 = {0, -s}; m10 = {0, -s}; m11 = {c, 0};
      } else if (op.axis == Axis::Y) {
        m00 = {c, 0}; m01 = {-s, 0}; m10 = {s, 0}; m11 = {c, 0};
      } else {
        m00 = {c, -s}; m01 = {0, 0}; m10 = {0, 0}; m11 = {c, s};
      }
      const std::uint64_t mask = mask_of(op.q1);
      for (std::uint64_t x = 0; x < dim; ++x) {
        if (x & mask) continue;
        const cdouble a = col[x];
        const cdouble b = col[x | mask];
        col[x] = m00 * a + m01 * b;
        col[x | mask] = m10 * a + m11 * b;
      }
      break;
    }
    case GateOp::Kind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      const std::uint64_t mask = mask_of(op.q1);
      for (std::uint64_t x = 0; x < dim; ++x) {
        if (x & mask) continue;
        const cdouble a = col[x];
        const cdouble b = col[x | mask];
        col[x] = r * (a + b);
        col[x | mask] = r * (a - b);
      }
      break;
    }
    case GateOp::Kind::ZZ: {
      const std::uint64_t ma = mask_of(op.q1);
      const std::uint64_t mb = mask_of(op.q2);
      const cdouble same(std::cos(op.angle), -std::sin(op.angle));
      const cdouble diff = std::conj(same);
      for (std::uint64_t x = 0; x < dim; ++x)
        col[x] *= (((x & ma) != 0) == ((x & mb) != 0)) ? same : diff;
      break;
    }
    case GateOp::Kind::CRotZ: {
      const std::uint64_t mc = mask_of(op.q1);
      const std::uint64_t mt = mask_of(op.q2);
      const cdouble lo(std::cos(op.angle), -std::sin(op.angle));
      const cdouble hi = std::conj(lo);
      for (std::uint64_t x = 0; x < dim; ++x)
        if (x & mc) col[x] *= (x & mt) ? hi : lo;
      break;
    }
    case GateOp::Kind::CPhase: {
      const std::uint64_t mc = mask_of(op.q1);
      const cdouble ph(std::cos(op.angle), -std::sin(op.angle));
      for (std::uint64_t x = 0; x < dim; ++x)
        if (x & mc) col[x] *= ph;
      break;
    }
    case GateOp::Kind::GlobalPhase: {
      const cdouble ph(std::cos(op.angle), -std::sin(op.angle));
      for (std::uint64_t x = 0; x < dim; ++x) col[x] *= ph;
      break;
    }
  }
}

}  // namespace

DenseMatrix gate_matrix(const GateSequence& seq) {
  if (seq.n_qubits > kGateCap)
    throw resource_error("gate_matrix capped at " + std::to_string(kGateCap) +
                         " qubits");
  const int n = seq.n_qubits;
  const std::size_t dim = 1ULL << n;
  // Apply the sequence to each basis column; column-major scratch, then
  // transpose into the row-major result.
  std::vector<cdouble> cols(dim * dim, cdouble(0.0, 0.0));
  for (std::size_t c = 0; c < dim; ++c) {
    cdouble* col = cols.data() + c * dim;
    col[c] = cdouble(1.0, 0.0);
    for (const auto& op : seq.ops) apply_op_to_column(col, n, op);
  }
  DenseMatrix m = DenseMatrix::zero(dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = cols[c * dim + r];
  return m;
}

// ---------------------------------------------------------------------
// Eigensolvers

namespace {

constexpr std::size_t kJacobiRealMax = 512;

double offdiagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) sum += a[p * n + q] * a[p * n + q];
  return std::sqrt(2.0 * sum);
}

/// Cyclic Jacobi sweeps for a real symmetric matrix.
void jacobi_real(std::vector<double>& a, std::size_t n,
                 std::vector<double>* vecs) {
  if (vecs) {
    vecs->assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) (*vecs)[i * n + i] = 1.0;
  }
  double scale = 0.0;
  for (std::size_t i = 0; i < n * n; ++i) scale = std::max(scale, std::abs(a[i]));
  if (scale == 0.0) return;
  const double stop = 1e-14 * scale * static_cast<double>(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiagonal_norm(a, n) < stop) return;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t =
            (theta >= 0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a[i * n + p];
          const double aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[i * n + q] = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double api = a[p * n + i];
          const double aqi = a[q * n + i];
          a[p * n + i] = c * api - s * aqi;
          a[q * n + i] = s * api + c * aqi;
        }
        if (vecs) {
          for (std::size_t i = 0; i < n; ++i) {
            const double vip = (*vecs)[i * n + p];
            const double viq = (*vecs)[i * n + q];
            (*vecs)[i * n + p] = c * vip - s * viq;
            (*vecs)[i * n + q] = s * vip + c * viq;
          }
        }
      }
    }
  }
  throw internal_error("jacobi_real failed to converge");
}

/// Householder reduction of a real symmetric matrix to tridiagonal form
/// (diagonal d, subdiagonal e); eigenvectors are not accumulated.
void tred2_values(std::vector<double>& a, std::size_t n,
                  std::vector<double>& d, std::vector<double>& e) {
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (i > 1) {
      double norm = 0.0;
      for (std::size_t k = 0; k <= l; ++k) norm += std::abs(a[i * n + k]);
      if (norm == 0.0) {
        e[i] = a[i * n + l];
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          a[i * n + k] /= norm;
          h += a[i * n + k] * a[i * n + k];
        }
        double f = a[i * n + l];
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = norm * g;
        h -= f * g;
        a[i * n + l] = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += a[j * n + k] * a[i * n + k];
          for (std::size_t k = j + 1; k <= l; ++k)
            g += a[k * n + j] * a[i * n + k];
          e[j] = g / h;
          f += e[j] * a[i * n + j];
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = a[i * n + j];
          e[j] = g = e[j] - hh * f;
          for (std::size_t k = 0; k <= j; ++k)
            a[j * n + k] -= f * e[k] + g * a[i * n + k];
        }
      }
    } else {
      e[i] = a[i * n + l];
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i * n + i];
}

double hypot2(double a, double b) { return std::hypot(a, b); }

/// Implicit QL with Wilkinson shifts on a tridiagonal matrix; eigenvalues
/// land in d.
void tqli_values(std::vector<double>& d, std::vector<double>& e,
                 std::size_t n) {
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  // Deflation needs an absolute floor: sparse spectra put zero diagonal
  // entries next to tiny couplings that a purely relative test never
  // accepts.
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    scale = std::max(scale, std::abs(d[i]) + std::abs(e[i]));
  const double floor = 1e-15 * std::max(scale, 1e-300);
  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-16 * dd + floor) break;
      }
      if (m != l) {
        if (++iterations == 64)
          throw internal_error("tqli failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

/// Cyclic Jacobi for a complex Hermitian matrix; rotation phases follow
/// the argument of the pivot entry.
void jacobi_complex(std::vector<cdouble>& a, std::size_t n,
                    std::vector<cdouble>* vecs) {
  if (vecs) {
    vecs->assign(n * n, cdouble(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) (*vecs)[i * n + i] = 1.0;
  }
  double scale = 0.0;
  for (const auto& v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return;
  const double stop = 1e-14 * scale * static_cast<double>(n);

  const auto offnorm = [&]() {
    double sum = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) sum += std::norm(a[p * n + q]);
    return std::sqrt(2.0 * sum);
  };

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offnorm() < stop) return;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cdouble apq = a[p * n + q];
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const double phi = 0.5 * std::atan2(2.0 * r, app - aqq);
        const double c = std::cos(phi);
        const cdouble s = std::sin(phi) * std::conj(apq) / r;
        const cdouble sc = std::conj(s);
        // A <- J^dagger A J with J[[p,q],[p,q]] = [[c, -conj(s)],[s, c]].
        for (std::size_t i = 0; i < n; ++i) {
          const cdouble aip = a[i * n + p];
          const cdouble aiq = a[i * n + q];
          a[i * n + p] = c * aip + s * aiq;
          a[i * n + q] = -sc * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const cdouble api = a[p * n + i];
          const cdouble aqi = a[q * n + i];
          a[p * n + i] = c * api + sc * aqi;
          a[q * n + i] = -s * api + c * aqi;
        }
        if (vecs) {
          for (std::size_t i = 0; i < n; ++i) {
            const cdouble vip = (*vecs)[i * n + p];
            const cdouble viq = (*vecs)[i * n + q];
            (*vecs)[i * n + p] = c * vip + s * viq;
            (*vecs)[i * n + q] = -sc * vip + c * viq;
          }
        }
      }
    }
  }
  throw internal_error("jacobi_complex failed to converge");
}

std::vector<EigenSolution::Cluster> cluster_values(
    const std::vector<double>& values, double tol) {
  std::vector<EigenSolution::Cluster> clusters;
  for (double v : values) {
    if (clusters.empty() || v - clusters.back().value > tol) {
      clusters.push_back({v, 1});
    } else {
      // Running mean keeps the representative centred.
      auto& c = clusters.back();
      c.value = (c.value * c.count + v) / (c.count + 1);
      ++c.count;
    }
  }
  return clusters;
}

}  // namespace

EigenSolution eigensolve(const DenseMatrix& m, double cluster_tol,
                         bool want_vectors) {
  const std::size_t n = m.dim;
  if (n > kEigenCap)
    throw resource_error("eigensolve capped at dimension " +
                         std::to_string(kEigenCap));
  double scale = 0.0;
  for (const auto& v : m.data) scale = std::max(scale, std::abs(v));
  if (!m.is_hermitian(1e-10 * std::max(1.0, scale)))
    throw config_error("eigensolve contract error: input is not Hermitian");

  EigenSolution sol;
  const bool real_input = m.max_abs_imag() < 1e-13 * std::max(1.0, scale);

  if (real_input) {
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = m.data[i].real();
    if (want_vectors || n <= kJacobiRealMax) {
      std::vector<double> vecs;
      jacobi_real(a, n, want_vectors ? &vecs : nullptr);
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x * n + x] < a[y * n + y];
      });
      sol.eigenvalues.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        sol.eigenvalues[i] = a[order[i] * n + order[i]];
      if (want_vectors) {
        sol.has_vectors = true;
        sol.vectors = DenseMatrix::zero(n);
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t r = 0; r < n; ++r)
            sol.vectors.at(r, c) = vecs[r * n + order[c]];
      }
    } else {
      std::vector<double> d;
      std::vector<double> e;
      tred2_values(a, n, d, e);
      tqli_values(d, e, n);
      std::sort(d.begin(), d.end());
      sol.eigenvalues = std::move(d);
    }
  } else {
    std::vector<cdouble> a = m.data;
    std::vector<cdouble> vecs;
    jacobi_complex(a, n, want_vectors ? &vecs : nullptr);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return a[x * n + x].real() < a[y * n + y].real();
    });
    sol.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      sol.eigenvalues[i] = a[order[i] * n + order[i]].real();
    if (want_vectors) {
      sol.has_vectors = true;
      sol.vectors = DenseMatrix::zero(n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
          sol.vectors.at(r, c) = vecs[r * n + order[c]];
    }
  }
  sol.clusters = cluster_values(sol.eigenvalues, cluster_tol);
  return sol;
}

DenseMatrix matrix_exponential_hermitian(const DenseMatrix& h, double scale) {
  const EigenSolution sol = eigensolve(h, 1e-12, true);
  const std::size_t n = h.dim;
  DenseMatrix out = DenseMatrix::zero(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = -scale * sol.eigenvalues[k];
    const cdouble phase(std::cos(angle), std::sin(angle));
    for (std::size_t r = 0; r < n; ++r) {
      const cdouble vr = sol.vectors.at(r, k) * phase;
      for (std::size_t c = 0; c < n; ++c)
        out.at(r, c) += vr * std::conj(sol.vectors.at(c, k));
    }
  }
  return out;
}

UnitaryEigensystem unitary_eigensystem(const DenseMatrix& u,
                                       double cluster_tol) {
  const std::size_t n = u.dim;
  const DenseMatrix ud = u.dagger();
  DenseMatrix re = DenseMatrix::zero(n);
  DenseMatrix im = DenseMatrix::zero(n);
  for (std::size_t i = 0; i < n * n; ++i) {
    re.data[i] = 0.5 * (u.data[i] + ud.data[i]);
    im.data[i] = cdouble(0.0, -0.5) * (u.data[i] - ud.data[i]);
  }

  const EigenSolution cos_sol = eigensolve(re, cluster_tol, true);
  UnitaryEigensystem out;
  out.angles.resize(n);
  out.vectors = DenseMatrix::zero(n);

  std::size_t k = 0;
  for (const auto& cluster : cos_sol.clusters) {
    const std::size_t c0 = k;
    const std::size_t width = cluster.count;
    k += width;
    // Project the sine part into this cosine eigenspace and diagonalize
    // the small block.
    std::vector<cdouble> block(width * width, cdouble(0.0, 0.0));
    std::vector<cdouble> tmp(n);
    for (std::size_t b = 0; b < width; ++b) {
      for (std::size_t r = 0; r < n; ++r) {
        cdouble acc(0.0, 0.0);
        for (std::size_t c = 0; c < n; ++c)
          acc += im.at(r, c) * cos_sol.vectors.at(c, c0 + b);
        tmp[r] = acc;
      }
      for (std::size_t a = 0; a < width; ++a) {
        cdouble acc(0.0, 0.0);
        for (std::size_t r = 0; r < n; ++r)
          acc += std::conj(cos_sol.vectors.at(r, c0 + a)) * tmp[r];
        block[a * width + b] = acc;
      }
    }
    std::vector<cdouble> bvecs;
    jacobi_complex(block, width, &bvecs);
    for (std::size_t b = 0; b < width; ++b) {
      const double sine = block[b * width + b].real();
      out.angles[c0 + b] = std::atan2(sine, cluster.value);
      for (std::size_t r = 0; r < n; ++r) {
        cdouble acc(0.0, 0.0);
        for (std::size_t a = 0; a < width; ++a)
          acc += cos_sol.vectors.at(r, c0 + a) * bvecs[a * width + b];
        out.vectors.at(r, c0 + b) = acc;
      }
    }
  }
  return out;
}

double pe_kernel(double delta, int work_qubits) {
  const double d = static_cast<double>(1ULL << work_qubits);
  double frac = delta - std::floor(delta);
  if (frac > 0.5) frac -= 1.0;
  const double denom = std::sin(M_PI * frac);
  if (std::abs(denom) < 1e-12) {
    const double x = M_PI * frac * d;
    // Near the peak use the sinc limit to stay finite.
    const double num = (std::abs(x) < 1e-12) ? 1.0 : std::sin(x) / x;
    return num * num;
  }
  const double num = std::sin(M_PI * frac * d);
  const double ratio = num / (d * denom);
  return ratio * ratio;
}

std::vector<double> pe_exact_distribution(const FermionHamiltonian& h,
                                          const PEConfig& cfg,
                                          const StateVector& input,
                                          bool use_exact_evolution) {
  const ResolvedPEConfig r = resolve_pe_config(h, cfg);
  if (input.n_qubits != r.simulation_qubits)
    throw config_error("input state size does not match the model");
  PauliHamiltonian shifted = jw_hamiltonian(h);
  shifted.constant -= r.e_max;
  const double step_dt = r.dt / r.intervals;

  std::vector<double> phases;   // per-step eigenphase angles theta_k
  DenseMatrix vectors;
  const std::size_t dim = 1ULL << r.simulation_qubits;

  if (use_exact_evolution) {
    const DenseMatrix hm = pauli_matrix(shifted);
    const EigenSolution sol = eigensolve(hm, 1e-12, true);
    phases.resize(dim);
    for (std::size_t k = 0; k < dim; ++k)
      phases[k] = -sol.eigenvalues[k] * step_dt;
    vectors = sol.vectors;
  } else {
    const GateSequence step =
        compile_trotter_step(shifted, step_dt, r.trotter_order);
    const UnitaryEigensystem sys = unitary_eigensystem(gate_matrix(step));
    phases = sys.angles;
    vectors = sys.vectors;
  }

  std::vector<double> probs(r.n_bins(), 0.0);
  for (std::size_t k = 0; k < dim; ++k) {
    cdouble overlap(0.0, 0.0);
    for (std::size_t x = 0; x < dim; ++x)
      overlap += std::conj(vectors.at(x, k)) * input.amps[x];
    const double weight = std::norm(overlap);
    if (weight < 1e-18) continue;
    const double phi =
        phases[k] * static_cast<double>(r.intervals) / (2.0 * M_PI);
    for (std::uint64_t m = 0; m < r.n_bins(); ++m) {
      const double delta =
          phi - static_cast<double>(m) / static_cast<double>(r.n_bins());
      probs[m] += weight * pe_kernel(delta, r.work_qubits);
    }
  }
  return probs;
}

}  // namespace fermisim
