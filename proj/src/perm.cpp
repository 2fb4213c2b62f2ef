#include "tsg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tsg {

std::string CycleType::str() const {
  if (lengths.empty()) return "()";
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (i) os << ',';
    os << lengths[i];
  }
  os << ')';
  return os.str();
}

Perm::Perm(int degree) : deg_(degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw data_error("permutation degree " + std::to_string(degree) +
                     " outside [1," + std::to_string(kMaxDegree) + "]");
  for (int i = 0; i < deg_; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Perm Perm::from_images(int degree, const std::vector<int>& images) {
  Perm p(degree);
  if (static_cast<int>(images.size()) != degree)
    throw data_error("image list has size " + std::to_string(images.size()) +
                     ", expected " + std::to_string(degree));
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree; ++i) {
    int v = images[i];
    if (v < 1 || v > degree)
      throw data_error("image " + std::to_string(v) + " outside [1," +
                       std::to_string(degree) + "]");
    if (seen[v - 1])
      throw data_error("image " + std::to_string(v) + " repeated");
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

namespace {

bool is_sep(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r'; }

}  // namespace

Perm Perm::parse(std::string_view text, int degree) {
  Perm p(degree);  // validates degree
  std::array<bool, kMaxDegree> used{};
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);

  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && is_sep(text[i])) ++i; };
  skip_ws();
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw parse_error(std::string("expected '(' but found '") + text[i] + "'");
    ++i;
    any_cycle = true;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size())
        throw parse_error("unterminated cycle: missing ')'");
      if (text[i] == ')') { ++i; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error(std::string("unexpected character '") + text[i] +
                          "' inside cycle");
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string run(text.substr(start, i - start));
      std::vector<int> points;
      if (degree <= 9) {
        for (char c : run) points.push_back(c - '0');
      } else {
        points.push_back(std::stoi(run));
      }
      for (int pt : points) {
        if (pt < 1 || pt > degree)
          throw parse_error("point '" + std::to_string(pt) +
                            "' outside [1," + std::to_string(degree) + "]");
        if (used[pt - 1])
          throw parse_error("point '" + std::to_string(pt) + "' repeated");
        used[pt - 1] = true;
        cycle.push_back(pt);
      }
    }
    for (size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  if (!any_cycle) {
    // Tolerate the empty string as the identity to keep CLI input forgiving.
    return p;
  }
  return from_images(degree, images);
}

int Perm::apply(int point) const {
  if (point < 1 || point > deg_)
    throw data_error("point " + std::to_string(point) + " outside [1," +
                     std::to_string(deg_) + "]");
  return img_[point - 1] + 1;
}

bool Perm::is_identity() const {
  for (int i = 0; i < deg_; ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.deg_ != b.deg_)
    throw data_error("composing permutations of different degrees");
  Perm r(a.deg_);
  for (int i = 0; i < a.deg_; ++i) r.img_[i] = a.img_[b.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(deg_);
  for (int i = 0; i < deg_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

int Perm::order() const {
  auto type = cycle_type();
  long long o = 1;
  for (int len : type.lengths) o = std::lcm(o, static_cast<long long>(len));
  return static_cast<int>(o);
}

Perm Perm::power(long long k) const {
  int o = order();
  long long e = k % o;
  if (e < 0) e += o;
  Perm r(deg_);
  Perm base = *this;
  while (e > 0) {
    if (e & 1) r = compose(r, base);
    base = compose(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<int> Perm::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < deg_; ++i)
    if (img_[i] == i) out.push_back(i + 1);
  return out;
}

CycleType Perm::cycle_type() const {
  CycleType t;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < deg_; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    if (len == 1)
      ++t.fixed;
    else
      t.lengths.push_back(len);
  }
  std::sort(t.lengths.rbegin(), t.lengths.rend());
  return t;
}

std::string Perm::str() const {
  std::array<bool, kMaxDegree> seen{};
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < deg_; ++i) {
    if (seen[i] || img_[i] == i) { seen[i] = true; continue; }
    any = true;
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << (j + 1);
      first = false;
      j = img_[j];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::strong_ordering Perm::operator<=>(const Perm& o) const {
  if (auto c = deg_ <=> o.deg_; c != 0) return c;
  for (int i = 0; i < deg_; ++i)
    if (auto c = img_[i] <=> o.img_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace tsg
