#include "richardson/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace richardson {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
    std::vector<bool> seen(window_.size() + 1, false);
    for (int x : window_) {
        if (x < 1 || static_cast<std::size_t>(x) > window_.size() || seen[x])
            throw std::invalid_argument("not a permutation window");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(std::size_t n) {
    std::vector<int> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(n - i);
    return Permutation(std::move(w));
}

Permutation Permutation::simple(std::size_t n, std::size_t i) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
    return identity(n).right_simple(i);
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::stringstream in(text);
        std::string part;
        while (std::getline(in, part, ',')) {
            if (part.empty()) throw std::invalid_argument("empty entry in permutation '" + text + "'");
            std::size_t used = 0;
            int value = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument("bad permutation entry '" + part + "'");
            w.push_back(value);
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation '" + text + "'");
            w.push_back(c - '0');
        }
    }
    if (w.empty()) throw std::invalid_argument("empty permutation");
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(window_.size());
    for (std::size_t i = 0; i < window_.size(); ++i) inv[window_[i] - 1] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> w(a.size());
    for (std::size_t i = 1; i <= a.size(); ++i) w[i - 1] = a(static_cast<std::size_t>(b(i)));
    return Permutation(std::move(w));
}

Permutation Permutation::left_simple(std::size_t i) const {
    Permutation p = *this;
    for (int& x : p.window_) {
        if (x == static_cast<int>(i))
            x = static_cast<int>(i + 1);
        else if (x == static_cast<int>(i + 1))
            x = static_cast<int>(i);
    }
    return p;
}

Permutation Permutation::right_simple(std::size_t i) const {
    Permutation p = *this;
    std::swap(p.window_[i - 1], p.window_[i]);
    return p;
}

bool Permutation::has_left_descent(std::size_t i) const {
    auto pos_i = std::find(window_.begin(), window_.end(), static_cast<int>(i));
    auto pos_next = std::find(window_.begin(), window_.end(), static_cast<int>(i + 1));
    return pos_next < pos_i;
}

std::string Permutation::to_string() const {
    bool wide = window_.size() > 9;
    std::string out;
    for (std::size_t i = 0; i < window_.size(); ++i) {
        if (wide && i) out += ',';
        out += std::to_string(window_[i]);
    }
    return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::size_t length(const Permutation& w) {
    std::size_t inv = 0;
    for (std::size_t i = 1; i <= w.size(); ++i)
        for (std::size_t j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

RankMatrix schubert_rank(const Permutation& w) {
    const std::size_t n = w.size();
    RankMatrix r(n);
    for (std::size_t i = 1; i <= n; ++i) {
        int count = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            if (w(j) >= static_cast<int>(i)) ++count;
            r(i, j) = count;
        }
    }
    return r;
}

RankMatrix opposite_rank(const Permutation& v) {
    const std::size_t n = v.size();
    RankMatrix r(n);
    for (std::size_t i = 1; i <= n; ++i) {
        int count = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            if (v(j) <= static_cast<int>(i)) ++count;
            r(i, j) = count;
        }
    }
    return r;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    const std::size_t n = v.size();
    RankMatrix rv = schubert_rank(v), rw = schubert_rank(w);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (rv(i, j) > rw(i, j)) return false;
    return true;
}

std::vector<Permutation> bruhat_interval(const Permutation& v, const Permutation& w) {
    std::vector<Permutation> out;
    if (v.size() != w.size() || !bruhat_leq(v, w)) return out;
    for (auto& s : all_permutations(v.size()))
        if (bruhat_leq(v, s) && bruhat_leq(s, w)) out.push_back(std::move(s));
    return out;
}

namespace {

// Maximal runs of positions [a, b] joined by reflections in J.
std::vector<std::pair<std::size_t, std::size_t>> blocks(std::size_t n, const ReflectionSet& J) {
    for (std::size_t j : J)
        if (j < 1 || j >= n) throw std::invalid_argument("reflection index out of range");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t start = 1;
    for (std::size_t p = 1; p <= n; ++p) {
        if (p == n || !J.count(p)) {
            out.emplace_back(start, p);
            start = p + 1;
        }
    }
    return out;
}

}  // namespace

CosetReps coset_reps(const Permutation& w, const ReflectionSet& J) {
    std::vector<int> lo = w.window(), hi = w.window();
    for (auto [a, b] : blocks(w.size(), J)) {
        std::sort(lo.begin() + static_cast<std::ptrdiff_t>(a - 1), lo.begin() + static_cast<std::ptrdiff_t>(b));
        std::sort(hi.begin() + static_cast<std::ptrdiff_t>(a - 1), hi.begin() + static_cast<std::ptrdiff_t>(b),
                  std::greater<>());
    }
    return {Permutation(std::move(lo)), Permutation(std::move(hi))};
}

std::size_t longest_parabolic_length(std::size_t n, const ReflectionSet& J) {
    std::size_t total = 0;
    for (auto [a, b] : blocks(n, J)) {
        std::size_t m = b - a + 1;
        total += m * (m - 1) / 2;
    }
    return total;
}

ReflectionSet parse_reflection_set(const std::string& text) {
    ReflectionSet J;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        J.insert(static_cast<std::size_t>(std::stoul(part)));
    }
    return J;
}

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
    const std::size_t n = w.size(), k = pattern.size();
    if (k > n) throw std::invalid_argument("contains_pattern: pattern longer than permutation");
    std::vector<std::size_t> idx(k);
    // Enumerate increasing index tuples.
    auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> bool {
        if (depth == k) {
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b)
                    if ((w(idx[a]) < w(idx[b])) != (pattern(a + 1) < pattern(b + 1))) return false;
            return true;
        }
        for (std::size_t i = from; i + (k - depth) <= n + 1; ++i) {
            idx[depth] = i;
            if (self(self, depth + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 1);
}

bool is_covexillary(const Permutation& w) {
    return w.size() < 4 || !contains_pattern(w, Permutation::parse("3412"));
}

}  // namespace richardson
