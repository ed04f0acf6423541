#include "khtight/surgery.hpp"

#include <algorithm>
#include <cstdlib>

namespace khtight {

void SurgeryDiagram::validate() const {
  const auto n = components.size();
  if (linking.size() != n) throw MathError("surgery: linking matrix has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (linking[i].size() != n) throw MathError("surgery: linking matrix is not square");
    const auto& c = components[i];
    if (c.coeff != 1 && c.coeff != -1) throw MathError("surgery: contact coefficient must be +1 or -1");
    if (linking[i][i] != c.tb + c.coeff)
      throw MathError("surgery: diagonal entry " + std::to_string(i) + " is not tb + coeff");
    for (std::size_t j = 0; j < i; ++j)
      if (linking[i][j] != linking[j][i]) throw MathError("surgery: linking matrix is not symmetric");
  }
}

long long h1_order(const SurgeryDiagram& s) {
  mpz_class d = abs(determinant_of(s.linking));
  if (!d.fits_slong_p()) throw ResourceError("h1 order exceeds 64 bits");
  return d.get_si();
}

namespace {

// Solves Q x = r exactly; Q must be nonsingular.
std::vector<mpq_class> solve_rational(const IntMatrix& q, const std::vector<int>& r) {
  const std::size_t n = q.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(q[i][j]);
    a[i][n] = r[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw MathError("surgery: linking matrix is singular");
    std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      mpq_class f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace

D3Result d3(const SurgeryDiagram& s) {
  s.validate();
  D3Result out;
  const auto n = s.size();
  out.chi = 1 + static_cast<int>(n);
  out.h1_order = h1_order(s);
  if (out.h1_order == 0) throw MathError("surgery: linking matrix is singular (b1 > 0)");
  out.sign = matrix_signature(s.linking);
  std::vector<int> rot;
  for (const auto& c : s.components) {
    rot.push_back(c.rot);
    if (c.coeff == 1) ++out.m;
  }
  auto x = solve_rational(s.linking, rot);
  out.c1_sq = 0;
  for (std::size_t i = 0; i < n; ++i) out.c1_sq += rot[i] * x[i];
  out.d3 = (out.c1_sq - 2 * out.chi - 3 * out.sign + 2) / 4 + out.m;
  out.d3.canonicalize();
  return out;
}

std::vector<int> surgery_letters(const BraidWord& input, const SurgeryOptions& options) {
  BraidWord w = input;
  validate(w);
  if (options.stabilize_even && w.strands % 2 == 0) {
    w.letters.push_back(w.strands);
    ++w.strands;
  }
  std::vector<int> base;
  for (int j = 1; j < w.strands; ++j) base.push_back(j);
  const auto n = w.letters.size();

  if (options.factor_base && !base.empty() && n >= base.size()) {
    for (std::size_t start = 0; start < n; ++start) {
      bool match = true;
      for (std::size_t k = 0; k < base.size() && match; ++k)
        match = w.letters[(start + k) % n] == base[k];
      if (!match) continue;
      std::vector<int> extras;
      for (std::size_t k = base.size(); k < n; ++k) extras.push_back(w.letters[(start + k) % n]);
      return extras;
    }
  }
  std::vector<int> extras;
  for (auto it = base.rbegin(); it != base.rend(); ++it) extras.push_back(-*it);
  extras.insert(extras.end(), w.letters.begin(), w.letters.end());
  return extras;
}

SurgeryDiagram braid_to_surgery(const BraidWord& w, const SurgeryOptions& options) {
  auto letters = surgery_letters(w, options);
  const auto n = letters.size();
  const auto& lc = options.linking;
  SurgeryDiagram s;
  s.linking.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    SurgeryComponent c;
    c.coeff = letters[i] > 0 ? -1 : 1;
    s.components.push_back(c);
    s.linking[i][i] = c.tb + c.coeff;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int a = std::abs(letters[i]), b = std::abs(letters[j]);
      long long lk = 0;
      if (a == b) lk = lc.same;
      else if (std::abs(a - b) == 1 && ((a < b) == lc.ascending)) lk = lc.adjacent;
      s.linking[i][j] = s.linking[j][i] = lk;
    }
  }
  return s;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace khtight
