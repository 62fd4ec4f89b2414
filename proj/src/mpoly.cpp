#include "mpoly.hpp"

namespace ytw {

MPoly MPoly::constant(const Scalar& c) {
  MPoly p(c.field());
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

MPoly MPoly::variable(const Field& f, int i) {
  MPoly p(f);
  Expo e{0, 0, 0, 0};
  e.at(i) = 1;
  p.add_term(e, f.one());
  return p;
}

void MPoly::add_term(const Expo& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly p(field_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly p = a;
  for (const auto& [e, c] : b.terms_) p.add_term(e, c);
  return p;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly p(a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Expo e;
      for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Scalar MPoly::eval(const std::vector<Scalar>& point) const {
  Scalar acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point.at(i);
    acc += t;
  }
  return acc;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << c.to_string();
    const char* names[4] = {"u1", "u2", "u3", "u4"};
    for (int i = 0; i < 4; ++i)
      if (e[i] > 0) {
        os << "*" << names[i];
        if (e[i] > 1) os << "^" << e[i];
      }
    first = false;
  }
  return os.str();
}

MPolyMat::MPolyMat(const Field& f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  data_.assign(static_cast<size_t>(rows) * cols, MPoly(f));
}

MPolyMat MPolyMat::identity(const Field& f, int n) {
  MPolyMat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = MPoly::constant(f.one());
  return m;
}

MPolyMat MPolyMat::lift(const SpMat& s) {
  MPolyMat m(s.field(), s.rows(), s.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (const auto& [j, v] : s.row(i)) m.at(i, j) = MPoly::constant(v);
  return m;
}

MPolyMat operator+(const MPolyMat& a, const MPolyMat& b) {
  MPolyMat m = a;
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) += b.at(i, j);
  return m;
}

MPolyMat operator-(const MPolyMat& a, const MPolyMat& b) {
  MPolyMat m = a;
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) = m.at(i, j) - b.at(i, j);
  return m;
}

MPolyMat operator*(const MPolyMat& a, const MPolyMat& b) {
  MPolyMat m(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        m.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return m;
}

MPolyMat MPolyMat::scaled(const MPoly& c) const {
  MPolyMat m = *this;
  for (MPoly& p : m.data_) p *= c;
  return m;
}

bool MPolyMat::is_zero() const {
  for (const MPoly& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

}  // namespace ytw
