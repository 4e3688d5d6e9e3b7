#pragma once

#include <string>
#include <vector>

namespace bethe {

/// Sequence of signs s_1..s_{m+n}; m entries are +1. Positions are 1-based in the API.
class ParitySeq {
 public:
  ParitySeq() = default;
  explicit ParitySeq(std::vector<int> signs);

  static ParitySeq standard(int m, int n);
  /// Every sequence with m plus signs, +1 sorted before -1 (standard first).
  static std::vector<ParitySeq> all(int m, int n);

  int m() const { return m_; }
  int n() const { return int(s_.size()) - m_; }
  int size() const { return int(s_.size()); }
  int operator[](int i) const { return s_.at(i - 1); }
  const std::vector<int>& signs() const { return s_; }
  bool is_standard() const;
  /// s^[i]: entries i and i+1 exchanged.
  ParitySeq swapped(int i) const;

  std::string to_string() const;

  friend bool operator==(const ParitySeq& a, const ParitySeq& b) { return a.s_ == b.s_; }
  friend bool operator!=(const ParitySeq& a, const ParitySeq& b) { return a.s_ != b.s_; }
  /// Standard sequence sorts first.
  friend bool operator<(const ParitySeq& a, const ParitySeq& b) { return a.s_ > b.s_; }

 private:
  std::vector<int> s_;
  int m_ = 0;
};

/// sigma_s and the counts s_i^+, s_i^-; entry i-1 belongs to position i.
struct ParityData {
  std::vector<int> sigma, plus, minus;
};

ParityData parity_data(const ParitySeq& s);

}  // namespace bethe
