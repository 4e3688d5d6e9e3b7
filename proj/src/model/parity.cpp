#include "bethe/model/parity.hpp"

#include <algorithm>
#include <stdexcept>

namespace bethe {

ParitySeq::ParitySeq(std::vector<int> signs) : s_(std::move(signs)) {
  for (int v : s_)
    if (v != 1 && v != -1) throw std::invalid_argument("parity entries must be +1 or -1");
  m_ = int(std::count(s_.begin(), s_.end(), 1));
}

ParitySeq ParitySeq::standard(int m, int n) {
  std::vector<int> s(m, 1);
  s.insert(s.end(), n, -1);
  return ParitySeq(s);
}

std::vector<ParitySeq> ParitySeq::all(int m, int n) {
  std::vector<int> s = standard(m, n).signs();
  std::vector<ParitySeq> out;
  // standard is the lexicographically largest arrangement
  do {
    out.emplace_back(s);
  } while (std::prev_permutation(s.begin(), s.end()));
  return out;
}

bool ParitySeq::is_standard() const { return *this == standard(m(), n()); }

ParitySeq ParitySeq::swapped(int i) const {
  if (i < 1 || i >= size()) throw std::out_of_range("swap position out of range");
  std::vector<int> s = s_;
  std::swap(s[i - 1], s[i]);
  return ParitySeq(s);
}

std::string ParitySeq::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < s_.size(); ++i) {
    if (i) out += ",";
    out += s_[i] > 0 ? "1" : "-1";
  }
  return out + ")";
}

ParityData parity_data(const ParitySeq& s) {
  int N = s.size(), m = s.m();
  ParityData d;
  int pos = 0, neg = 0;
  for (int i = 1; i <= N; ++i) {
    if (s[i] == 1)
      d.sigma.push_back(++pos);
    else
      d.sigma.push_back(m + ++neg);
  }
  for (int i = 1; i <= N; ++i) {
    int plus = 0, minus = 0;
    for (int j = i + 1; j <= N; ++j) plus += s[j] == 1;
    for (int j = 1; j < i; ++j) minus += s[j] == -1;
    d.plus.push_back(plus);
    d.minus.push_back(minus);
    int sg = d.sigma[i - 1];
    int ep = s[i] == 1 ? m - sg : sg - i;
    int em = s[i] == 1 ? i - sg : sg - m - 1;
    if (ep != plus || em != minus) throw std::logic_error("parity counts disagree with sigma");
  }
  return d;
}

}  // namespace bethe
