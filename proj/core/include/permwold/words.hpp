#pragma once

// Words in the free monoids over the S-alphabet {1..m} and T-alphabet {1..n},
// and the rewriting system S_i T_j -> T_j' S_i' (theta(i,j) = (i',j')) whose
// normal forms T_w S_u name the elements of the single-vertex 2-graph
// semigroup.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permwold {

using Label = std::uint32_t;  // 1-based generator index

enum class Family : std::uint8_t { S, T };

struct Letter {
  Family family = Family::S;
  Label index = 1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A finite word, written outermost-to-innermost: "s1 t2" is S_1 T_2, which
/// applied to a vector v gives S_1(T_2 v).
struct Word {
  std::vector<Letter> letters;

  [[nodiscard]] bool empty() const { return letters.empty(); }
  [[nodiscard]] std::size_t size() const { return letters.size(); }
  [[nodiscard]] std::size_t count(Family f) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

Word s_word(std::initializer_list<Label> labels);
Word t_word(std::initializer_list<Label> labels);
Word s_word(const std::vector<Label>& labels);
Word t_word(const std::vector<Label>& labels);

/// Labels of the word, dropping the family tags.
std::vector<Label> labels_of(const Word& w);

std::string to_string(const Word& w);
Word parse_word(std::string_view text);

/// A permutation of {1..m} x {1..n}. Construction rejects non-bijections.
class Theta {
 public:
  using Pair = std::pair<Label, Label>;

  Theta(Label m, Label n, std::vector<Pair> images);

  static Theta identity(Label m, Label n);
  /// Build from quadruples [i, j, i', j']; every (i,j) must appear once.
  static Theta from_quadruples(Label m, Label n,
                               const std::vector<std::array<Label, 4>>& quads);

  [[nodiscard]] Label m() const { return m_; }
  [[nodiscard]] Label n() const { return n_; }

  [[nodiscard]] Pair operator()(Label i, Label j) const;
  /// The (i,j) with theta(i,j) == (ip, jp).
  [[nodiscard]] Pair inverse(Label ip, Label jp) const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] std::vector<std::array<Label, 4>> quadruples() const;

  friend bool operator==(const Theta&, const Theta&) = default;

 private:
  [[nodiscard]] std::size_t slot(Label i, Label j) const;

  Label m_;
  Label n_;
  std::vector<Pair> forward_;
  std::vector<Pair> backward_;
};

/// Throws ValidationError if some letter is out of range for theta's m, n.
void check_word(const Theta& theta, const Word& w);

Word concat(const Word& a, const Word& b);

/// Rewrite every S-letter-then-T-letter pair until the word has shape T_w S_u.
Word normalize(const Theta& theta, const Word& w);

/// theta_{k,l}: for |u| = k, |w| = l, S_u T_w = T_w' S_u'. Words are encoded
/// as base-m (resp. base-n) integers, most significant letter outermost.
class ThetaExt {
 public:
  ThetaExt(Label m, Label n, std::size_t k, std::size_t l,
           std::vector<std::pair<std::size_t, std::size_t>> images);

  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] std::size_t l() const { return l_; }
  [[nodiscard]] std::size_t domain_size() const { return images_.size(); }

  /// (u, w) -> (u', w') as S-label and T-label sequences.
  [[nodiscard]] std::pair<std::vector<Label>, std::vector<Label>> operator()(
      const std::vector<Label>& u, const std::vector<Label>& w) const;
  [[nodiscard]] std::pair<std::size_t, std::size_t> at(std::size_t u_code,
                                                       std::size_t w_code) const;
  [[nodiscard]] bool is_bijection() const;
  [[nodiscard]] bool is_identity() const;

 private:
  Label m_;
  Label n_;
  std::size_t k_;
  std::size_t l_;
  std::size_t w_count_;
  std::vector<std::pair<std::size_t, std::size_t>> images_;
};

inline constexpr std::size_t kThetaExtBudget = 1'000'000;

/// Throws ResourceError when m^k * n^l exceeds kThetaExtBudget.
ThetaExt theta_ext(const Theta& theta, std::size_t k, std::size_t l);

/// Base-`radix` code of a label sequence and its inverse.
std::size_t encode_labels(const std::vector<Label>& labels, Label radix);
std::vector<Label> decode_labels(std::size_t code, std::size_t length,
                                 Label radix);

}  // namespace permwold
