#include "qpt/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace qpt {

namespace {

std::vector<std::uint64_t> close_set(const std::vector<Mat2>& gens, long long modulus,
                                     long long max_order) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<Mat2> frontier;
  Mat2 id = identity(modulus);
  seen.insert(id.encode());
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Mat2> next;
    for (const Mat2& x : frontier) {
      for (const Mat2& g : gens) {
        Mat2 y = x * g;
        if (seen.insert(y.encode()).second) {
          next.push_back(y);
          if (static_cast<long long>(seen.size()) > max_order)
            throw std::runtime_error("subgroup closure exceeds element budget");
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool sorted_contains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// level of an element set under the given per-modulus group-order function
template <typename OrderFn>
long long level_of(const std::vector<std::uint64_t>& elems, long long n, OrderFn ord) {
  long long sz = static_cast<long long>(elems.size());
  for (long long m : divisors(n)) {
    std::unordered_set<std::uint64_t> img;
    for (std::uint64_t code : elems) img.insert(Mat2::decode(code, n).reduce(m).encode());
    long long kernel = ord(n) / ord(m);
    if (sz == static_cast<long long>(img.size()) * kernel) return m;
  }
  return n;
}

}  // namespace

bool SL2Part::contains(const Mat2& m) const {
  return m.n == modulus && sorted_contains(elements, m.encode());
}

long long SL2Part::level() const {
  return level_of(elements, modulus, [](long long m) { return m == 1 ? 1 : sl2_order(m); });
}

std::vector<Mat2> SL2Part::element_matrices() const {
  std::vector<Mat2> out;
  out.reserve(elements.size());
  for (std::uint64_t c : elements) out.push_back(Mat2::decode(c, modulus));
  return out;
}

Subgroup Subgroup::close(const std::vector<Mat2>& gens, long long modulus, long long max_order) {
  for (const Mat2& g : gens) {
    if (g.n != modulus) throw std::invalid_argument("generator modulus mismatch");
    if (!g.invertible()) throw std::invalid_argument("generator not invertible mod N");
  }
  Subgroup h;
  h.modulus_ = modulus;
  h.generators_ = gens;
  h.elements_ = close_set(gens, modulus, max_order);
  return h;
}

Subgroup Subgroup::from_elements(std::vector<std::uint64_t> elems, long long modulus,
                                 std::vector<Mat2> gens) {
  Subgroup h;
  h.modulus_ = modulus;
  h.generators_ = std::move(gens);
  h.elements_ = std::move(elems);
  std::sort(h.elements_.begin(), h.elements_.end());
  return h;
}

std::vector<Mat2> Subgroup::element_matrices() const {
  std::vector<Mat2> out;
  out.reserve(elements_.size());
  for (std::uint64_t c : elements_) out.push_back(Mat2::decode(c, modulus_));
  return out;
}

bool Subgroup::contains(const Mat2& m) const {
  return m.n == modulus_ && sorted_contains(elements_, m.encode());
}

bool Subgroup::has_minus_identity() const { return contains(minus_identity(modulus_)); }

std::vector<long long> Subgroup::det_image() const {
  std::vector<long long> dets;
  for (std::uint64_t c : elements_) dets.push_back(Mat2::decode(c, modulus_).det());
  std::sort(dets.begin(), dets.end());
  dets.erase(std::unique(dets.begin(), dets.end()), dets.end());
  return dets;
}

bool Subgroup::det_surjective() const {
  long long units = 0;
  for (long long u = 1; u <= modulus_; ++u)
    if (std::gcd(u % modulus_, modulus_) == 1) ++units;
  if (modulus_ == 1) units = 1;
  return static_cast<long long>(det_image().size()) == units;
}

long long Subgroup::level() const {
  if (level_ == 0)
    level_ = level_of(elements_, modulus_, [](long long m) { return gl2_order(m); });
  return level_;
}

long long Subgroup::index_in_gl2() const { return gl2_order(modulus_) / order(); }

bool Subgroup::admissible() const { return has_minus_identity() && det_surjective(); }

SL2Part Subgroup::sl2_part() const {
  SL2Part part;
  part.modulus = modulus_;
  for (std::uint64_t c : elements_)
    if (Mat2::decode(c, modulus_).det() == 1 % modulus_) part.elements.push_back(c);
  return part;
}

Subgroup Subgroup::conjugate(const Mat2& g) const {
  Mat2 gi = g.inverse();
  std::vector<std::uint64_t> elems;
  elems.reserve(elements_.size());
  for (std::uint64_t c : elements_) elems.push_back((g * Mat2::decode(c, modulus_) * gi).encode());
  std::vector<Mat2> gens;
  for (const Mat2& h : generators_) gens.push_back(g * h * gi);
  return from_elements(std::move(elems), modulus_, std::move(gens));
}

Subgroup Subgroup::reduce(long long m) const {
  std::unordered_set<std::uint64_t> img;
  for (std::uint64_t c : elements_) img.insert(Mat2::decode(c, modulus_).reduce(m).encode());
  std::vector<Mat2> gens;
  for (const Mat2& g : generators_) gens.push_back(g.reduce(m));
  return from_elements(std::vector<std::uint64_t>(img.begin(), img.end()), m, std::move(gens));
}

bool conjugacy_equal(const Subgroup& h1, const Subgroup& h2) {
  if (h1.modulus() != h2.modulus()) throw std::invalid_argument("conjugacy_equal: modulus mismatch");
  if (h1.order() != h2.order() || h1.level() != h2.level() ||
      h1.det_image() != h2.det_image() ||
      h1.has_minus_identity() != h2.has_minus_identity())
    return false;
  if (h1.elements() == h2.elements()) return true;
  long long n = h1.modulus();
  std::vector<Mat2> mats = h1.element_matrices();
  for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(n) * n * n * n; ++code) {
    Mat2 g = Mat2::decode(code, n);
    if (!g.invertible()) continue;
    Mat2 gi = g.inverse();
    bool ok = true;
    for (const Mat2& h : mats) {
      if (!h2.contains(g * h * gi)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;  // same order, so conjugate containment is equality
  }
  return false;
}

Subgroup parse_subgroup_line(const std::string& line) {
  std::string s;
  for (char c : line)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) parts.push_back(tok);
  if (parts.empty()) throw std::invalid_argument("empty subgroup line");
  long long n = std::stoll(parts[0]);
  std::vector<Mat2> gens;
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].empty()) continue;
    long long v[4];
    int vi = 0;
    std::string cur;
    for (char c : parts[i]) {
      if (c == '[' || c == ']') {
        if (!cur.empty()) {
          if (vi >= 4) throw std::invalid_argument("bad matrix: " + parts[i]);
          v[vi++] = std::stoll(cur);
          cur.clear();
        }
      } else if (c == ',') {
        if (!cur.empty()) {
          if (vi >= 4) throw std::invalid_argument("bad matrix: " + parts[i]);
          v[vi++] = std::stoll(cur);
          cur.clear();
        }
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty() && vi < 4) v[vi++] = std::stoll(cur);
    if (vi != 4) throw std::invalid_argument("bad matrix: " + parts[i]);
    gens.emplace_back(n, v[0], v[1], v[2], v[3]);
  }
  return Subgroup::close(gens, n);
}

std::string subgroup_line(const Subgroup& h) {
  std::string out = std::to_string(h.modulus());
  for (const Mat2& g : h.generators()) out += "; " + g.str();
  return out;
}

namespace {
std::vector<std::uint64_t> matrix_codes(long long n, bool sl2_only) {
  std::vector<std::uint64_t> out;
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      for (long long c = 0; c < n; ++c)
        for (long long d = 0; d < n; ++d) {
          long long det = ((a * d - b * c) % n + n) % n;
          if (sl2_only ? det == 1 % n : std::gcd(det, n) == 1)
            out.push_back(Mat2(n, a, b, c, d).encode());
        }
  return out;
}
}  // namespace

std::vector<std::uint64_t> gl2_elements(long long n) { return matrix_codes(n, false); }
std::vector<std::uint64_t> sl2_elements(long long n) { return matrix_codes(n, true); }

}  // namespace qpt
