#include "qcox/groups.hpp"

#include <algorithm>
#include <sstream>

#include "qcox/errors.hpp"

namespace qcox {

Carrier Carrier::permutations(int degree) {
  Carrier c;
  c.kind_ = Kind::Permutation;
  c.degree_ = degree;
  return c;
}

Carrier Carrier::free_group(std::vector<std::string> generators) {
  Carrier c;
  c.kind_ = Kind::Free;
  c.degree_ = int(generators.size());
  c.gens_ = std::move(generators);
  return c;
}

Carrier Carrier::matrices(int dim) {
  Carrier c;
  c.kind_ = Kind::Matrix;
  c.degree_ = dim;
  return c;
}

FreeWord reduce(FreeWord w) {
  std::vector<std::pair<int, int>> out;
  for (auto& l : w.letters) {
    if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
      out.pop_back();
    else
      out.push_back(l);
  }
  return FreeWord{out};
}

FreeWord Carrier::generator(int i, int exponent) const {
  FreeWord w;
  for (int k = 0; k < std::abs(exponent); ++k) w.letters.push_back({i, exponent > 0 ? 1 : -1});
  return w;
}

GroupElement Carrier::identity() const {
  switch (kind_) {
    case Kind::Permutation: {
      Permutation p;
      for (int i = 0; i < degree_; ++i) p.images.push_back(i);
      return p;
    }
    case Kind::Free:
      return FreeWord{};
    case Kind::Matrix:
      return Matrix::identity(degree_);
  }
  return FreeWord{};
}

void Carrier::validate(const GroupElement& a) const {
  switch (kind_) {
    case Kind::Permutation: {
      auto* p = std::get_if<Permutation>(&a);
      if (!p || int(p->images.size()) != degree_) throw Error(ErrorKind::CarrierMismatch, "not a permutation of the carrier degree");
      std::vector<int> s = p->images;
      std::sort(s.begin(), s.end());
      for (int i = 0; i < degree_; ++i)
        if (s[i] != i) throw Error(ErrorKind::CarrierMismatch, "image list is not a permutation");
      return;
    }
    case Kind::Free: {
      auto* w = std::get_if<FreeWord>(&a);
      if (!w) throw Error(ErrorKind::CarrierMismatch, "not a free-group word");
      for (auto& [g, e] : w->letters)
        if (g < 0 || g >= degree_ || (e != 1 && e != -1)) throw Error(ErrorKind::CarrierMismatch, "bad letter in word");
      return;
    }
    case Kind::Matrix: {
      auto* m = std::get_if<Matrix>(&a);
      if (!m || m->rows() != degree_ || m->cols() != degree_) throw Error(ErrorKind::CarrierMismatch, "matrix of wrong size");
      if (determinant(*m) == 0) throw Error(ErrorKind::CarrierMismatch, "singular matrix");
      return;
    }
  }
}

GroupElement Carrier::multiply(const GroupElement& a, const GroupElement& b) const {
  switch (kind_) {
    case Kind::Permutation: {
      auto& p = std::get<Permutation>(a);
      auto& q = std::get<Permutation>(b);
      Permutation r;
      r.images.resize(degree_);
      for (int i = 0; i < degree_; ++i) r.images[i] = p.images[q.images[i]];
      return r;
    }
    case Kind::Free: {
      FreeWord w = std::get<FreeWord>(a);
      auto& v = std::get<FreeWord>(b);
      w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
      return reduce(w);
    }
    case Kind::Matrix:
      return std::get<Matrix>(a) * std::get<Matrix>(b);
  }
  return a;
}

GroupElement Carrier::inverse(const GroupElement& a) const {
  switch (kind_) {
    case Kind::Permutation: {
      auto& p = std::get<Permutation>(a);
      Permutation r;
      r.images.resize(degree_);
      for (int i = 0; i < degree_; ++i) r.images[p.images[i]] = i;
      return r;
    }
    case Kind::Free: {
      FreeWord w = std::get<FreeWord>(a);
      std::reverse(w.letters.begin(), w.letters.end());
      for (auto& l : w.letters) l.second = -l.second;
      return w;
    }
    case Kind::Matrix: {
      auto inv = qcox::inverse(std::get<Matrix>(a));
      if (!inv) throw Error(ErrorKind::CarrierMismatch, "singular matrix has no inverse");
      return *inv;
    }
  }
  return a;
}

bool Carrier::equal(const GroupElement& a, const GroupElement& b) const {
  if (kind_ == Kind::Free) return reduce(std::get<FreeWord>(a)) == reduce(std::get<FreeWord>(b));
  return a == b;
}

std::string Carrier::to_string(const GroupElement& a) const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Permutation: {
      os << "[";
      auto& p = std::get<Permutation>(a);
      for (size_t i = 0; i < p.images.size(); ++i) os << (i ? "," : "") << p.images[i];
      os << "]";
      break;
    }
    case Kind::Free: {
      auto w = reduce(std::get<FreeWord>(a));
      if (w.letters.empty()) os << "1";
      for (size_t i = 0; i < w.letters.size(); ++i)
        os << (i ? " " : "") << gens_[w.letters[i].first] << (w.letters[i].second < 0 ? "^-1" : "");
      break;
    }
    case Kind::Matrix: {
      auto& m = std::get<Matrix>(a);
      os << "[";
      for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << "]";
      }
      os << "]";
      break;
    }
  }
  return os.str();
}

}  // namespace qcox
