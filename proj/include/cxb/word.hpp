#pragma once

#include <string>
#include <vector>

namespace cxb {

// Word in a free group on 1-based generators: letter +k is generator k,
// letter -k its inverse. Kept freely reduced at all times.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(const std::vector<int>& letters) {
    for (int l : letters) push(l);
  }
  static BraidWord gen(int index1) { return BraidWord({index1}); }

  void push(int letter) {
    if (letter == 0) throw std::invalid_argument("BraidWord: zero letter");
    if (!letters_.empty() && letters_.back() == -letter)
      letters_.pop_back();
    else
      letters_.push_back(letter);
  }
  void append(const BraidWord& w) {
    for (int l : w.letters_) push(l);
  }
  void append_inverse(const BraidWord& w) {
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it)
      push(-*it);
  }

  BraidWord inverse() const {
    BraidWord out;
    out.append_inverse(*this);
    return out;
  }
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    BraidWord out = a;
    out.append(b);
    return out;
  }

  // conjugation with composition left to right: a^b = b^-1 a b
  static BraidWord conj(const BraidWord& a, const BraidWord& b) {
    BraidWord out = b.inverse();
    out.append(a);
    out.append(b);
    return out;
  }
  // Br^m(a, b): (aba...)_m (bab...)_m^-1, composition left to right
  static BraidWord braid_relator(const BraidWord& a, const BraidWord& b, int m) {
    BraidWord lhs, rhs;
    for (int i = 0; i < m; ++i) {
      lhs.append(i % 2 == 0 ? a : b);
      rhs.append(i % 2 == 0 ? b : a);
    }
    lhs.append_inverse(rhs);
    return lhs;
  }
  static BraidWord commutator(const BraidWord& a, const BraidWord& b) {
    return braid_relator(a, b, 2);
  }

  const std::vector<int>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_generator() const {
    int m = 0;
    for (int l : letters_) m = std::max(m, l < 0 ? -l : l);
    return m;
  }

  bool operator==(const BraidWord& o) const { return letters_ == o.letters_; }

  std::string str() const {
    std::string s;
    for (int l : letters_) {
      if (!s.empty()) s += ' ';
      s += std::to_string(l);
    }
    return s.empty() ? "e" : s;
  }

 private:
  std::vector<int> letters_;
};

}  // namespace cxb
