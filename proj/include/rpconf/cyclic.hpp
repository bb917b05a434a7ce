#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rpconf/errors.hpp"

namespace rpconf {

using Label = int;

// A sequence of distinct labels considered up to rotation and reversal.
class CyclicWord {
  public:
    CyclicWord() = default;
    explicit CyclicWord(std::vector<Label> labels) : canon_(canonical(std::move(labels))) {}

    const std::vector<Label>& labels() const { return canon_; }
    std::size_t size() const { return canon_.size(); }

    bool operator==(const CyclicWord& o) const { return canon_ == o.canon_; }
    bool operator!=(const CyclicWord& o) const { return !(*this == o); }
    bool operator<(const CyclicWord& o) const { return canon_ < o.canon_; }

    bool contains(Label l) const {
        return std::find(canon_.begin(), canon_.end(), l) != canon_.end();
    }

    CyclicWord relabeled(const std::vector<Label>& perm) const {
        std::vector<Label> w = canon_;
        for (auto& l : w) l = perm[static_cast<std::size_t>(l)];
        return CyclicWord(std::move(w));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < canon_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(canon_[i]);
        }
        return s;
    }

    // Lexicographically minimal rotation over both orientations.
    static std::vector<Label> canonical(std::vector<Label> w) {
        const std::size_t n = w.size();
        if (n <= 1) return w;
        std::vector<Label> best;
        for (int dir = 0; dir < 2; ++dir) {
            for (std::size_t r = 0; r < n; ++r) {
                std::vector<Label> cand(n);
                for (std::size_t i = 0; i < n; ++i) cand[i] = w[(r + i) % n];
                if (best.empty() || cand < best) best = std::move(cand);
            }
            std::reverse(w.begin(), w.end());
        }
        return best;
    }

  private:
    std::vector<Label> canon_;
};

}  // namespace rpconf
