#include "simplex_cover/point.hpp"

#include <algorithm>
#include <stdexcept>

namespace simplex_cover {

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw std::invalid_argument("points need dimension d >= 2");
  }
}

Point Point::filled(std::size_t d, const Rational& value) {
  return Point(std::vector<Rational>(d, value));
}

Point Point::from_lattice(std::span<const int> v) {
  std::vector<Rational> coords;
  coords.reserve(v.size());
  for (int c : v) coords.emplace_back(c);
  return Point(std::move(coords));
}

std::string Point::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += coords_[i].str();
  }
  return out;
}

namespace {

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("point dimension mismatch");
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<Rational> out;
  out.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a[i] + b[i]);
  return Point(std::move(out));
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<Rational> out;
  out.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a[i] - b[i]);
  return Point(std::move(out));
}

Point operator*(const Rational& s, const Point& p) {
  std::vector<Rational> out;
  out.reserve(p.dim());
  for (const auto& c : p.coords()) out.push_back(s * c);
  return Point(std::move(out));
}

Point parse_point(std::string_view text, std::size_t d) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start));
    coords.push_back(Rational::parse(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coords.size() != d) {
    throw ParseError("expected " + std::to_string(d) + " coordinates, got " +
                     std::to_string(coords.size()));
  }
  return Point(std::move(coords));
}

Permutation::Permutation(std::vector<int> images)
    : images_(std::move(images)), inverse_(images_.size(), -1) {
  const int d = static_cast<int>(images_.size());
  for (int i = 0; i < d; ++i) {
    const int j = images_[static_cast<std::size_t>(i)];
    if (j < 0 || j >= d || inverse_[static_cast<std::size_t>(j)] != -1) {
      throw std::invalid_argument("not a permutation");
    }
    inverse_[static_cast<std::size_t>(j)] = i;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<int> images(d);
  for (std::size_t i = 0; i < d; ++i) images[i] = static_cast<int>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> zero_based(images.begin(), images.end());
  for (int& j : zero_based) --j;
  return Permutation(std::move(zero_based));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out = images_;
  for (int& j : out) ++j;
  return out;
}

}  // namespace simplex_cover
