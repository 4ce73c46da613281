#include "permwold/words.hpp"

#include <algorithm>
#include <sstream>

#include "permwold/errors.hpp"

namespace permwold {

std::size_t Word::count(Family f) const {
  return static_cast<std::size_t>(std::count_if(
      letters.begin(), letters.end(),
      [f](const Letter& l) { return l.family == f; }));
}

namespace {

Word family_word(Family f, const std::vector<Label>& labels) {
  Word w;
  w.letters.reserve(labels.size());
  for (Label l : labels) w.letters.push_back({f, l});
  return w;
}

}  // namespace

Word s_word(std::initializer_list<Label> labels) {
  return family_word(Family::S, std::vector<Label>(labels));
}
Word t_word(std::initializer_list<Label> labels) {
  return family_word(Family::T, std::vector<Label>(labels));
}
Word s_word(const std::vector<Label>& labels) {
  return family_word(Family::S, labels);
}
Word t_word(const std::vector<Label>& labels) {
  return family_word(Family::T, labels);
}

std::vector<Label> labels_of(const Word& w) {
  std::vector<Label> out;
  out.reserve(w.size());
  for (const auto& l : w.letters) out.push_back(l.index);
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += (l.family == Family::S ? 's' : 't');
    out += std::to_string(l.index);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 's' && token[0] != 't'))
      throw ValidationError("bad letter '" + token + "'");
    Label idx = 0;
    for (std::size_t k = 1; k < token.size(); ++k) {
      if (token[k] < '0' || token[k] > '9')
        throw ValidationError("bad letter '" + token + "'");
      idx = idx * 10 + static_cast<Label>(token[k] - '0');
    }
    if (idx == 0) throw ValidationError("letter indices are 1-based: " + token);
    w.letters.push_back({token[0] == 's' ? Family::S : Family::T, idx});
  }
  return w;
}

Theta::Theta(Label m, Label n, std::vector<Pair> images)
    : m_(m), n_(n), forward_(std::move(images)) {
  if (m_ == 0 || n_ == 0) throw ValidationError("theta needs m, n >= 1");
  const std::size_t size = static_cast<std::size_t>(m_) * n_;
  if (forward_.size() != size)
    throw ValidationError("theta must map all " + std::to_string(size) +
                          " pairs");
  backward_.assign(size, {0, 0});
  std::vector<bool> hit(size, false);
  for (Label i = 1; i <= m_; ++i) {
    for (Label j = 1; j <= n_; ++j) {
      const auto [ip, jp] = forward_[slot(i, j)];
      if (ip < 1 || ip > m_ || jp < 1 || jp > n_)
        throw ValidationError("theta image out of range");
      const std::size_t target = slot(ip, jp);
      if (hit[target])
        throw ValidationError("theta is not a bijection: (" +
                              std::to_string(ip) + "," + std::to_string(jp) +
                              ") is hit twice");
      hit[target] = true;
      backward_[target] = {i, j};
    }
  }
}

Theta Theta::identity(Label m, Label n) {
  std::vector<Pair> images;
  for (Label i = 1; i <= m; ++i)
    for (Label j = 1; j <= n; ++j) images.emplace_back(i, j);
  return Theta(m, n, std::move(images));
}

Theta Theta::from_quadruples(Label m, Label n,
                             const std::vector<std::array<Label, 4>>& quads) {
  if (m == 0 || n == 0) throw ValidationError("theta needs m, n >= 1");
  const std::size_t size = static_cast<std::size_t>(m) * n;
  std::vector<Pair> images(size, {0, 0});
  std::vector<bool> seen(size, false);
  for (const auto& q : quads) {
    if (q[0] < 1 || q[0] > m || q[1] < 1 || q[1] > n)
      throw ValidationError("theta source out of range");
    const std::size_t s = (q[0] - 1) * n + (q[1] - 1);
    if (seen[s])
      throw ValidationError("theta lists (" + std::to_string(q[0]) + "," +
                            std::to_string(q[1]) + ") twice");
    seen[s] = true;
    images[s] = {q[2], q[3]};
  }
  if (quads.size() != size)
    throw ValidationError("theta must list all " + std::to_string(size) +
                          " pairs");
  return Theta(m, n, std::move(images));
}

std::size_t Theta::slot(Label i, Label j) const {
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

Theta::Pair Theta::operator()(Label i, Label j) const {
  return forward_[slot(i, j)];
}

Theta::Pair Theta::inverse(Label ip, Label jp) const {
  return backward_[slot(ip, jp)];
}

bool Theta::is_identity() const {
  for (Label i = 1; i <= m_; ++i)
    for (Label j = 1; j <= n_; ++j)
      if (forward_[slot(i, j)] != Pair{i, j}) return false;
  return true;
}

std::vector<std::array<Label, 4>> Theta::quadruples() const {
  std::vector<std::array<Label, 4>> out;
  for (Label i = 1; i <= m_; ++i)
    for (Label j = 1; j <= n_; ++j) {
      const auto [ip, jp] = forward_[slot(i, j)];
      out.push_back({i, j, ip, jp});
    }
  return out;
}

void check_word(const Theta& theta, const Word& w) {
  for (const auto& l : w.letters) {
    const Label bound = l.family == Family::S ? theta.m() : theta.n();
    if (l.index < 1 || l.index > bound)
      throw ValidationError("letter " + to_string(Word{{l}}) +
                            " out of range");
  }
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word normalize(const Theta& theta, const Word& w) {
  check_word(theta, w);
  Word out = w;
  auto& ls = out.letters;
  // Leftmost-innermost: always rewrite the leftmost S-then-T pair.
  for (;;) {
    auto it = std::adjacent_find(ls.begin(), ls.end(),
                                 [](const Letter& a, const Letter& b) {
                                   return a.family == Family::S &&
                                          b.family == Family::T;
                                 });
    if (it == ls.end()) break;
    const auto [ip, jp] = theta(it->index, std::next(it)->index);
    *it = {Family::T, jp};
    *std::next(it) = {Family::S, ip};
  }
  return out;
}

std::size_t encode_labels(const std::vector<Label>& labels, Label radix) {
  std::size_t code = 0;
  for (Label l : labels) code = code * radix + (l - 1);
  return code;
}

std::vector<Label> decode_labels(std::size_t code, std::size_t length,
                                 Label radix) {
  std::vector<Label> out(length, 1);
  for (std::size_t k = length; k-- > 0;) {
    out[k] = static_cast<Label>(code % radix) + 1;
    code /= radix;
  }
  return out;
}

ThetaExt::ThetaExt(Label m, Label n, std::size_t k, std::size_t l,
                   std::vector<std::pair<std::size_t, std::size_t>> images)
    : m_(m), n_(n), k_(k), l_(l), images_(std::move(images)) {
  w_count_ = 1;
  for (std::size_t c = 0; c < l_; ++c) w_count_ *= n_;
}

std::pair<std::size_t, std::size_t> ThetaExt::at(std::size_t u_code,
                                                 std::size_t w_code) const {
  return images_.at(u_code * w_count_ + w_code);
}

std::pair<std::vector<Label>, std::vector<Label>> ThetaExt::operator()(
    const std::vector<Label>& u, const std::vector<Label>& w) const {
  if (u.size() != k_ || w.size() != l_)
    throw ValidationError("theta_ext: word lengths do not match (k, l)");
  const auto [uc, wc] = at(encode_labels(u, m_), encode_labels(w, n_));
  return {decode_labels(uc, k_, m_), decode_labels(wc, l_, n_)};
}

bool ThetaExt::is_bijection() const {
  std::vector<bool> hit(images_.size(), false);
  for (const auto& [uc, wc] : images_) {
    const std::size_t s = uc * w_count_ + wc;
    if (s >= hit.size() || hit[s]) return false;
    hit[s] = true;
  }
  return true;
}

bool ThetaExt::is_identity() const {
  for (std::size_t s = 0; s < images_.size(); ++s)
    if (images_[s].first * w_count_ + images_[s].second != s) return false;
  return true;
}

ThetaExt theta_ext(const Theta& theta, std::size_t k, std::size_t l) {
  const Label m = theta.m();
  const Label n = theta.n();
  std::size_t u_count = 1;
  std::size_t w_count = 1;
  for (std::size_t c = 0; c < k; ++c) {
    u_count *= m;
    if (u_count > kThetaExtBudget)
      throw ResourceError("theta_ext: m^k exceeds budget");
  }
  for (std::size_t c = 0; c < l; ++c) {
    w_count *= n;
    if (w_count > kThetaExtBudget)
      throw ResourceError("theta_ext: n^l exceeds budget");
  }
  if (u_count * w_count > kThetaExtBudget)
    throw ResourceError("theta_ext: m^k * n^l exceeds budget");

  std::vector<std::pair<std::size_t, std::size_t>> images;
  images.reserve(u_count * w_count);
  for (std::size_t uc = 0; uc < u_count; ++uc) {
    const Word su = s_word(decode_labels(uc, k, m));
    for (std::size_t wc = 0; wc < w_count; ++wc) {
      const Word tw = t_word(decode_labels(wc, l, n));
      const Word nf = normalize(theta, concat(su, tw));
      std::vector<Label> wp(nf.letters.size() - k);
      std::vector<Label> up(k);
      for (std::size_t p = 0; p < l; ++p) wp[p] = nf.letters[p].index;
      for (std::size_t p = 0; p < k; ++p) up[p] = nf.letters[l + p].index;
      images.emplace_back(encode_labels(up, m), encode_labels(wp, n));
    }
  }
  return ThetaExt(m, n, k, l, std::move(images));
}

}  // namespace permwold
