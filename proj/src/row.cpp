#include "hornex/row.hpp"

#include "hornex/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace hornex {

Row Row::all_twos(std::size_t w) {
  Row r;
  r.labels_.assign(w, kTwo);
  r.index();
  return r;
}

Row Row::from_labels(std::vector<std::uint32_t> labels) {
  // Renumber bubbles by first appearance, which is ascending minimum element.
  std::map<std::uint32_t, std::uint32_t> remap;
  for (auto& l : labels) {
    if (l < kFirstBubble) continue;
    auto [it, fresh] =
        remap.try_emplace(l, kFirstBubble + static_cast<std::uint32_t>(remap.size()));
    l = it->second;
  }
  Row r;
  r.labels_ = std::move(labels);
  r.index();
  for (std::size_t i = 0; i < r.bubble_sizes_.size(); ++i) {
    if (r.bubble_sizes_[i] < 2) {
      throw RowError("n-bubble " + r.bubble(i).to_string() + " has fewer than two elements");
    }
  }
  return r;
}

Row Row::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::uint32_t> labels;
  std::string tok;
  // Bare 'n' gets key kFirstBubble; 'n<i>' gets kFirstBubble + i.
  while (in >> tok) {
    if (tok == "0") {
      labels.push_back(kZero);
    } else if (tok == "1") {
      labels.push_back(kOne);
    } else if (tok == "2") {
      labels.push_back(kTwo);
    } else if (tok == "n") {
      labels.push_back(kFirstBubble);
    } else if (tok.size() > 1 && tok[0] == 'n') {
      std::uint32_t i = 0;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), i);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || i == 0) {
        throw RowError("bad row token '" + tok + "'");
      }
      labels.push_back(kFirstBubble + i);
    } else {
      throw RowError("bad row token '" + tok + "'");
    }
  }
  if (labels.empty()) throw RowError("empty row");
  return from_labels(std::move(labels));
}

void Row::index() {
  counts_[0] = counts_[1] = counts_[2] = 0;
  bubble_sizes_.clear();
  for (auto l : labels_) {
    if (l < kFirstBubble) {
      ++counts_[l];
    } else {
      std::size_t b = l - kFirstBubble;
      if (b >= bubble_sizes_.size()) bubble_sizes_.resize(b + 1, 0);
      ++bubble_sizes_[b];
    }
  }
}

namespace {

VarSet collect(const std::vector<std::uint32_t>& labels, std::uint32_t label) {
  std::vector<Var> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) out.push_back(static_cast<Var>(i + 1));
  }
  return VarSet::from_sorted(std::move(out));
}

}  // namespace

VarSet Row::zeros() const { return collect(labels_, kZero); }
VarSet Row::ones() const { return collect(labels_, kOne); }
VarSet Row::twos() const { return collect(labels_, kTwo); }
VarSet Row::bubble(std::size_t i) const {
  return collect(labels_, kFirstBubble + static_cast<std::uint32_t>(i));
}

std::vector<VarSet> Row::bubbles() const {
  std::vector<std::vector<Var>> members(num_bubbles());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] >= kFirstBubble) {
      members[labels_[i] - kFirstBubble].push_back(static_cast<Var>(i + 1));
    }
  }
  std::vector<VarSet> out;
  out.reserve(members.size());
  for (auto& m : members) out.push_back(VarSet::from_sorted(std::move(m)));
  return out;
}

RowParts Row::parts() const { return RowParts{w(), zeros(), ones(), twos(), bubbles()}; }

bool Row::contains(const VarSet& x) const {
  std::vector<std::size_t> hit(num_bubbles(), 0);
  std::size_t ones_hit = 0;
  for (Var v : x) {
    if (v < 1 || v > w()) return false;
    auto l = label(v);
    if (l == kZero) return false;
    if (l == kOne) ++ones_hit;
    if (l >= kFirstBubble) ++hit[l - kFirstBubble];
  }
  if (ones_hit != num_ones()) return false;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i] == bubble_sizes_[i]) return false;
  }
  return true;
}

std::string Row::render() const {
  std::string s;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ' ';
    auto l = labels_[i];
    if (l < kFirstBubble) {
      s += static_cast<char>('0' + l);
    } else {
      s += 'n';
      s += std::to_string(l - kFirstBubble + 1);
    }
  }
  return s;
}

Row canonicalize(const RowParts& parts) {
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> labels(parts.w, kUnset);
  auto place = [&](const VarSet& s, std::uint32_t label) {
    for (Var v : s) {
      if (v < 1 || v > parts.w) {
        throw RowError("position " + std::to_string(v) + " outside 1.." + std::to_string(parts.w));
      }
      if (labels[v - 1] != kUnset) {
        throw RowError("position " + std::to_string(v) + " assigned twice");
      }
      labels[v - 1] = label;
    }
  };
  place(parts.zeros, Row::kZero);
  place(parts.ones, Row::kOne);
  place(parts.twos, Row::kTwo);
  for (std::size_t i = 0; i < parts.bubbles.size(); ++i) {
    if (parts.bubbles[i].size() < 2) {
      throw RowError("n-bubble " + parts.bubbles[i].to_string() + " has fewer than two elements");
    }
    place(parts.bubbles[i], Row::kFirstBubble + static_cast<std::uint32_t>(i));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == kUnset) {
      throw RowError("position " + std::to_string(i + 1) + " not covered");
    }
  }
  return Row::from_labels(std::move(labels));
}

BigCount cardinality(const Row& r) {
  BigCount n = pow2(r.num_twos());
  for (auto nu : r.bubble_sizes()) n *= pow2(nu) - 1;
  return n;
}

namespace {

// Coefficients of (1+x)^gamma * prod_i ((1+x)^nu_i - x^nu_i), truncated to
// degrees < len. Coefficient j counts members with |ones| + j elements.
std::vector<BigCount> free_part_polynomial(const Row& r, std::size_t len) {
  std::vector<BigCount> poly = binomial_row(r.num_twos(), len);
  for (auto nu : r.bubble_sizes()) {
    if (poly.empty()) break;
    // (1+x)^nu - x^nu has coefficients C(nu, j) for j < nu.
    std::vector<BigCount> factor = binomial_row(nu, std::min(nu, len));
    std::size_t out_len = std::min(len, poly.size() + factor.size() - 1);
    std::vector<BigCount> next(out_len);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0) continue;
      for (std::size_t j = 0; j < factor.size() && i + j < out_len; ++j) {
        next[i + j] += poly[i] * factor[j];
      }
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

BigCount card_k(const Row& r, std::size_t k) {
  if (k < r.num_ones() || k > r.w()) return 0;
  std::size_t j = k - r.num_ones();
  auto poly = free_part_polynomial(r, j + 1);
  return j < poly.size() ? poly[j] : BigCount(0);
}

BigCount card_le_k(const Row& r, std::size_t k) {
  if (k < r.num_ones()) return 0;
  std::size_t j = std::min(k, r.w()) - r.num_ones();
  auto poly = free_part_polynomial(r, j + 1);
  BigCount sum = 0;
  for (const auto& c : poly) sum += c;
  return sum;
}

BigCount card_ge_k(const Row& r, std::size_t k) {
  if (k == 0) return cardinality(r);
  return cardinality(r) - card_le_k(r, k - 1);
}

std::vector<BigCount> card_profile(const Row& r) {
  std::vector<BigCount> out(r.w() + 1);
  auto poly = free_part_polynomial(r, r.w() + 1);
  for (std::size_t j = 0; j < poly.size() && r.num_ones() + j <= r.w(); ++j) {
    out[r.num_ones() + j] = poly[j];
  }
  return out;
}

namespace {

class MemberWalker {
 public:
  MemberWalker(const Row& r, std::optional<std::size_t> size,
               const std::function<bool(const VarSet&)>& emit)
      : row_(r), emit_(emit), chosen_(r.w(), 0) {
    for (Var v = 1; v <= r.w(); ++v) {
      if (r.is_one(v)) chosen_[v - 1] = 1;
      if (r.is_two(v)) digits_.push_back({v, Row::kNoBubble, false});
    }
    auto bubbles = r.bubbles();
    for (std::size_t b = 0; b < bubbles.size(); ++b) {
      bool first = true;
      for (Var v : bubbles[b]) {
        digits_.push_back({v, b, first});
        first = false;
      }
    }
    // lower_cap_[m]: most ones placeable on digits 0..m-1, counting a bubble
    // wholly inside that range as nu - 1 and the lower part of a bubble that
    // straddles m at full length (rest_cap corrects for it).
    lower_cap_.assign(digits_.size() + 1, 0);
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      lower_cap_[i + 1] = lower_cap_[i] + 1;
      if (digits_[i].bubble != Row::kNoBubble &&
          (i + 1 == digits_.size() || digits_[i + 1].bubble != digits_[i].bubble)) {
        lower_cap_[i + 1] -= 1;  // top element of a bubble wholly below i + 1
      }
    }
    ones_in_bubble_.assign(bubbles.size(), 0);
    base_ = r.num_ones();
    if (size) {
      target_ = *size;
      if (*size < base_ || *size - base_ > lower_cap_[digits_.size()]) empty_ = true;
    }
  }

  bool run() {
    if (empty_) return true;
    return descend(digits_.size(), base_);
  }

 private:
  struct Digit {
    Var var;
    std::size_t bubble;
    bool least;  // least significant element of its bubble
  };

  // Max ones placeable on digits 0..m-1 given the choices made above m.
  std::size_t rest_cap(std::size_t m) const {
    std::size_t cap = lower_cap_[m];
    if (m == 0 || m == digits_.size()) return cap;
    std::size_t b = digits_[m].bubble;
    if (b == Row::kNoBubble || digits_[m - 1].bubble != b) return cap;
    // Bubble b straddles m. If every processed element is 1, one of the
    // remaining ones must stay 0.
    std::size_t processed = 0;
    for (std::size_t j = m; j < digits_.size() && digits_[j].bubble == b; ++j) ++processed;
    if (ones_in_bubble_[b] == processed) cap -= 1;
    return cap;
  }

  bool descend(std::size_t i, std::size_t count) {
    if (i == 0) {
      if (target_ && count != *target_) return true;
      std::vector<Var> members;
      members.reserve(count);
      for (std::size_t p = 0; p < chosen_.size(); ++p) {
        if (chosen_[p]) members.push_back(static_cast<Var>(p + 1));
      }
      return emit_(VarSet::from_sorted(std::move(members)));
    }
    const Digit& d = digits_[i - 1];
    for (int bit = 0; bit <= 1; ++bit) {
      if (bit == 1 && d.bubble != Row::kNoBubble && d.least &&
          ones_in_bubble_[d.bubble] + 1 == row_.bubble_size(d.bubble)) {
        continue;  // would fill the bubble
      }
      std::size_t next = count + bit;
      chosen_[d.var - 1] = static_cast<char>(bit);
      if (d.bubble != Row::kNoBubble) ones_in_bubble_[d.bubble] += bit;
      bool keep_going = true;
      if (!target_ || (next <= *target_ && *target_ - next <= rest_cap(i - 1))) {
        keep_going = descend(i - 1, next);
      }
      if (d.bubble != Row::kNoBubble) ones_in_bubble_[d.bubble] -= bit;
      chosen_[d.var - 1] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  const Row& row_;
  const std::function<bool(const VarSet&)>& emit_;
  std::vector<char> chosen_;
  std::vector<Digit> digits_;
  std::vector<std::size_t> lower_cap_;
  std::vector<std::size_t> ones_in_bubble_;
  std::size_t base_ = 0;
  std::optional<std::size_t> target_;
  bool empty_ = false;
};

}  // namespace

bool for_each_member(const Row& r, std::optional<std::size_t> size,
                     const std::function<bool(const VarSet&)>& emit) {
  MemberWalker walker(r, size, emit);
  return walker.run();
}

std::vector<VarSet> enumerate(const Row& r) {
  std::vector<VarSet> out;
  for_each_member(r, std::nullopt, [&](const VarSet& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

std::vector<VarSet> enumerate_k(const Row& r, std::size_t k) {
  std::vector<VarSet> out;
  for_each_member(r, k, [&](const VarSet& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

}  // namespace hornex
