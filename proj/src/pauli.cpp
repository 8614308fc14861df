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

#include "fermisim/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace fermisim {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

PauliString::PauliString(cdouble c, LetterMap l, int n)
    : coeff(c), letters(std::move(l)), n_qubits(n) {
  std::sort(letters.begin(), letters.end());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const int q = letters[i].first;
    if (q < 1 || q > n_qubits)
      throw config_error("pauli letter on qubit " + std::to_string(q) +
                         " outside register of size " + std::to_string(n));
    if (i > 0 && letters[i - 1].first == q)
      throw config_error("duplicate letter on qubit " + std::to_string(q));
  }
}

std::string PauliString::to_string() const {
  std::ostringstream os;
  os << "(" << coeff.real();
  if (coeff.imag() != 0.0) os << (coeff.imag() < 0 ? "-" : "+")
                              << std::abs(coeff.imag()) << "i";
  os << ")";
  if (letters.empty()) os << " I";
  for (const auto& [q, p] : letters) os << " " << pauli_char(p) << q;
  return os.str();
}

namespace {

// Product table for single-qubit letters: left * right.
// Returns {has_letter, letter, phase}.
struct LetterProduct {
  bool identity;
  Pauli letter;
  cdouble phase;
};

LetterProduct single_product(Pauli a, Pauli b) {
  static const cdouble one(1.0, 0.0);
  static const cdouble pi(0.0, 1.0);
  static const cdouble mi(0.0, -1.0);
  if (a == b) return {true, Pauli::X, one};
  // sigma_x sigma_y = i sigma_z, sigma_y sigma_z = i sigma_x,
  // sigma_z sigma_x = i sigma_y; reversed order flips the sign.
  switch (a) {
    case Pauli::X:
      return (b == Pauli::Y) ? LetterProduct{false, Pauli::Z, pi}
                             : LetterProduct{false, Pauli::Y, mi};
    case Pauli::Y:
      return (b == Pauli::Z) ? LetterProduct{false, Pauli::X, pi}
                             : LetterProduct{false, Pauli::Z, mi};
    case Pauli::Z:
    default:
      return (b == Pauli::X) ? LetterProduct{false, Pauli::Y, pi}
                             : LetterProduct{false, Pauli::X, mi};
  }
}

}  // namespace

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits != b.n_qubits)
    throw config_error("pauli_multiply: register size mismatch (" +
                       std::to_string(a.n_qubits) + " vs " +
                       std::to_string(b.n_qubits) + ")");
  PauliString out;
  out.n_qubits = a.n_qubits;
  out.coeff = a.coeff * b.coeff;
  out.letters.reserve(a.letters.size() + b.letters.size());

  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.letters.size() || j < b.letters.size()) {
    if (j == b.letters.size() ||
        (i < a.letters.size() && a.letters[i].first < b.letters[j].first)) {
      out.letters.push_back(a.letters[i++]);
    } else if (i == a.letters.size() ||
               b.letters[j].first < a.letters[i].first) {
      out.letters.push_back(b.letters[j++]);
    } else {
      const auto prod = single_product(a.letters[i].second,
                                       b.letters[j].second);
      out.coeff *= prod.identity ? cdouble(1.0, 0.0) : prod.phase;
      if (!prod.identity)
        out.letters.emplace_back(a.letters[i].first, prod.letter);
      ++i;
      ++j;
    }
  }
  return out;
}

bool letters_less(const LetterMap& a, const LetterMap& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return static_cast<int>(x.second) < static_cast<int>(y.second);
      });
}

void PauliSum::merge(double tol) {
  std::map<LetterMap, cdouble, bool (*)(const LetterMap&, const LetterMap&)>
      acc(&letters_less);
  for (const auto& s : strings) acc[s.letters] += s.coeff;
  strings.clear();
  for (auto& [letters, coeff] : acc) {
    if (std::abs(coeff) < tol) continue;
    PauliString s;
    s.coeff = coeff;
    s.letters = letters;
    s.n_qubits = n_qubits;
    strings.push_back(std::move(s));
  }
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (n_qubits == 0) n_qubits = other.n_qubits;
  if (other.n_qubits != n_qubits)
    throw config_error("PauliSum: register size mismatch");
  strings.insert(strings.end(), other.strings.begin(), other.strings.end());
  return *this;
}

PauliSum& PauliSum::operator*=(cdouble scale) {
  for (auto& s : strings) s.coeff *= scale;
  return *this;
}

double PauliHamiltonian::coefficient_l1() const {
  double sum = 0.0;
  for (const auto& t : terms) sum += std::abs(t.coeff);
  return sum;
}

PauliHamiltonian finalize_real(const PauliSum& sum, double merge_tol,
                               double imag_tol) {
  PauliSum merged = sum;
  merged.merge(merge_tol);
  PauliHamiltonian h;
  h.n_qubits = merged.n_qubits;
  for (const auto& s : merged.strings) {
    if (std::abs(s.coeff.imag()) >= imag_tol)
      throw internal_error("residual imaginary coefficient " +
                           std::to_string(s.coeff.imag()) + " on string " +
                           s.to_string());
    if (s.letters.empty()) {
      h.constant += s.coeff.real();
    } else {
      h.terms.push_back({s.coeff.real(), s.letters});
    }
  }
  // merge() already left the strings sorted by letter map.
  return h;
}

}  // namespace fermisim
