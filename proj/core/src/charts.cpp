#include "richardson/charts.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace richardson {

std::string chart_variable_name(std::size_t n, std::size_t i, std::size_t j, const char* stem) {
    if (n <= 9) return stem + std::to_string(i) + std::to_string(j);
    return stem + std::to_string(i) + "_" + std::to_string(j);
}

Chart::Chart(Permutation u) : u_(std::move(u)), index_(u_.size() * u_.size(), -1) {
    const std::size_t n = u_.size();
    const Permutation uinv = u_.inverse();
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j < static_cast<std::size_t>(uinv(i)); ++j) {
            index_[(i - 1) * n + (j - 1)] = static_cast<int>(free_.size());
            free_.emplace_back(i, j);
            names.push_back(chart_variable_name(n, i, j));
        }
    context_ = make_context(std::move(names));
}

std::optional<std::size_t> Chart::variable_at(std::size_t i, std::size_t j) const {
    int k = index_[(i - 1) * n() + (j - 1)];
    if (k < 0) return std::nullopt;
    return static_cast<std::size_t>(k);
}

std::vector<Position> Chart::d_up() const {
    std::vector<Position> out;
    for (auto [i, j] : free_)
        if (static_cast<int>(i) > u_(j)) out.emplace_back(i, j);
    return out;
}

std::vector<Position> Chart::d_down() const {
    std::vector<Position> out;
    for (auto [i, j] : free_)
        if (static_cast<int>(i) < u_(j)) out.emplace_back(i, j);
    return out;
}

ChartMatrix::ChartMatrix(std::size_t n, ContextPtr context)
    : n_(n), context_(std::move(context)), e_(n * n, Polynomial(context_)) {}

RationalMatrix ChartMatrix::evaluate(const std::vector<Rational>& point) const {
    RationalMatrix m(n_, n_);
    for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = 1; j <= n_; ++j) m(i, j) = richardson::evaluate((*this)(i, j), point);
    return m;
}

ChartMatrix generic_matrix(const Chart& chart) {
    const std::size_t n = chart.n();
    ChartMatrix m(n, chart.context());
    for (std::size_t j = 1; j <= n; ++j) m(static_cast<std::size_t>(chart.u()(j)), j) = Polynomial(chart.context(), 1);
    for (std::size_t k = 0; k < chart.free_positions().size(); ++k) {
        auto [i, j] = chart.free_positions()[k];
        m(i, j) = Polynomial::variable(chart.context(), k);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Rank conditions

std::vector<RankCondition> schubert_conditions(const Permutation& w, RankConditions mode) {
    const std::size_t n = w.size();
    RankMatrix r = schubert_rank(w);
    auto rank = [&](std::size_t i, std::size_t j) { return (i > n || j == 0) ? 0 : r(i, j); };
    std::vector<RankCondition> out;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            int bound = r(i, j);
            if (bound >= static_cast<int>(std::min(n - i + 1, j))) continue;
            if (mode == RankConditions::Essential) {
                if (j > 1 && bound == rank(i, j - 1) + 1) continue;
                if (i < n && bound == rank(i + 1, j) + 1) continue;
            }
            out.push_back({i, j, bound});
        }
    return out;
}

std::vector<RankCondition> opposite_conditions(const Permutation& v, RankConditions mode) {
    const std::size_t n = v.size();
    RankMatrix r = opposite_rank(v);
    auto rank = [&](std::size_t i, std::size_t j) { return (i == 0 || j == 0) ? 0 : r(i, j); };
    std::vector<RankCondition> out;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            int bound = r(i, j);
            if (bound >= static_cast<int>(std::min(i, j))) continue;
            if (mode == RankConditions::Essential) {
                if (j > 1 && bound == rank(i, j - 1) + 1) continue;
                if (i > 1 && bound == rank(i - 1, j) + 1) continue;
            }
            out.push_back({i, j, bound});
        }
    return out;
}

namespace {

class MinorTable {
public:
    explicit MinorTable(const ChartMatrix& m) : m_(m) {}

    // Determinant of rows/cols given as bitmasks (bit k = index k+1).
    const Polynomial& det(std::uint32_t rows, std::uint32_t cols) {
        std::uint64_t key = (std::uint64_t{rows} << 32) | cols;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        check_deadline();
        Polynomial value(m_.context());
        int last = 31 - __builtin_clz(cols);
        std::uint32_t rest = cols & ~(1u << last);
        std::size_t c = static_cast<std::size_t>(last) + 1;
        if (rest == 0) {
            int r = __builtin_ctz(rows);
            value = m_(static_cast<std::size_t>(r) + 1, c);
        } else {
            int p = __builtin_popcount(rest);  // position of the last column
            int idx = 0;
            for (std::uint32_t bits = rows; bits; bits &= bits - 1, ++idx) {
                int r = __builtin_ctz(bits);
                const Polynomial& entry = m_(static_cast<std::size_t>(r) + 1, c);
                if (entry.is_zero()) continue;
                const Polynomial& sub = det(rows & ~(1u << r), rest);
                if (sub.is_zero()) continue;
                Polynomial term = entry * sub;
                if ((idx + p) % 2) value -= term;
                else value += term;
            }
        }
        return memo_.emplace(key, std::move(value)).first->second;
    }

private:
    const ChartMatrix& m_;
    std::unordered_map<std::uint64_t, Polynomial> memo_;
};

void subsets(std::uint32_t universe, int k, std::vector<std::uint32_t>& out) {
    std::vector<int> bits;
    for (int b = 0; b < 32; ++b)
        if (universe & (1u << b)) bits.push_back(b);
    std::vector<int> pick(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int depth, std::size_t from, std::uint32_t mask) -> void {
        if (depth == k) {
            out.push_back(mask);
            return;
        }
        for (std::size_t t = from; t + static_cast<std::size_t>(k - depth) <= bits.size(); ++t)
            self(self, depth + 1, t + 1, mask | (1u << bits[t]));
    };
    rec(rec, 0, 0, 0);
}

std::string monic_key(const Polynomial& p) {
    Polynomial q = p * (Rational(1) / p.terms().front().coefficient);
    return q.to_string();
}

void add_minors(IdealGens& ideal, std::set<std::string>& seen, MinorTable& table, std::uint32_t rows,
                std::uint32_t cols, int size) {
    std::vector<std::uint32_t> row_sets, col_sets;
    subsets(rows, size, row_sets);
    subsets(cols, size, col_sets);
    for (auto rs : row_sets)
        for (auto cs : col_sets) {
            const Polynomial& d = table.det(rs, cs);
            if (d.is_zero()) continue;
            if (seen.insert(monic_key(d)).second) ideal.add(d);
        }
}

std::uint32_t range_mask(std::size_t lo, std::size_t hi) {
    std::uint32_t m = 0;
    for (std::size_t k = lo; k <= hi; ++k) m |= 1u << (k - 1);
    return m;
}

}  // namespace

IdealGens schubert_ideal_on(const ChartMatrix& m, const Permutation& w, RankConditions mode) {
    if (m.n() != w.size()) throw std::invalid_argument("schubert_ideal_on: size mismatch");
    IdealGens ideal(m.context());
    std::set<std::string> seen;
    MinorTable table(m);
    for (const auto& c : schubert_conditions(w, mode))
        add_minors(ideal, seen, table, range_mask(c.i, m.n()), range_mask(1, c.j), c.rank + 1);
    return ideal;
}

IdealGens opposite_ideal_on(const ChartMatrix& m, const Permutation& v, RankConditions mode) {
    if (m.n() != v.size()) throw std::invalid_argument("opposite_ideal_on: size mismatch");
    IdealGens ideal(m.context());
    std::set<std::string> seen;
    MinorTable table(m);
    for (const auto& c : opposite_conditions(v, mode))
        add_minors(ideal, seen, table, range_mask(1, c.i), range_mask(1, c.j), c.rank + 1);
    return ideal;
}

IdealGens schubert_ideal_in_chart(const Permutation& w, const Permutation& u, RankConditions mode) {
    if (w.size() != u.size()) throw std::invalid_argument("schubert_ideal_in_chart: size mismatch");
    return schubert_ideal_on(generic_matrix(Chart(u)), w, mode);
}

IdealGens opposite_ideal_in_chart(const Permutation& v, const Permutation& u, RankConditions mode) {
    if (v.size() != u.size()) throw std::invalid_argument("opposite_ideal_in_chart: size mismatch");
    return opposite_ideal_on(generic_matrix(Chart(u)), v, mode);
}

IdealGens richardson_ideal_in_chart(const Permutation& v, const Permutation& w, const Permutation& u,
                                    RankConditions mode) {
    if (v.size() != u.size() || w.size() != u.size())
        throw std::invalid_argument("richardson_ideal_in_chart: size mismatch");
    ChartMatrix m = generic_matrix(Chart(u));
    IdealGens ideal = schubert_ideal_on(m, w, mode);
    ideal.append(opposite_ideal_on(m, v, mode));
    return ideal;
}

// ---------------------------------------------------------------------------
// Points

CellPair identify_cells(const RationalMatrix& x) {
    const std::size_t n = x.rows();
    if (x.cols() != n || x.rank() != n) throw std::invalid_argument("identify_cells: matrix is singular");
    RankMatrix sw(n), nw(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            sw(i, j) = static_cast<int>(x.block(i, n, 1, j).rank());
            nw(i, j) = static_cast<int>(x.block(1, i, 1, j).rank());
        }
    std::vector<int> sigma(n), tau(n);
    for (std::size_t j = 1; j <= n; ++j) {
        // sw(i,j) - sw(i,j-1) is 1 exactly for i <= sigma(j).
        int s = 0, t = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            int jump = sw(i, j) - (j > 1 ? sw(i, j - 1) : 0);
            if (jump == 1) s = static_cast<int>(i);
        }
        for (std::size_t i = n; i >= 1; --i) {
            int jump = nw(i, j) - (j > 1 ? nw(i, j - 1) : 0);
            if (jump == 1) t = static_cast<int>(i);
        }
        sigma[j - 1] = s;
        tau[j - 1] = t;
    }
    CellPair cells{Permutation(sigma), Permutation(tau)};
    if (!(schubert_rank(cells.sigma) == sw) || !(opposite_rank(cells.tau) == nw))
        throw std::logic_error("identify_cells: rank data inconsistent");
    return cells;
}

std::vector<Permutation> fixed_points_of_richardson(const Permutation& v, const Permutation& w) {
    return bruhat_interval(v, w);
}

std::optional<RationalMatrix> to_chart_form(const RationalMatrix& x, const Permutation& u) {
    const std::size_t n = u.size();
    RationalMatrix out(n, n);
    for (std::size_t j = 1; j <= n; ++j) {
        std::vector<Rational> col(n + 1);
        for (std::size_t i = 1; i <= n; ++i) col[i] = x(i, j);
        for (std::size_t k = 1; k < j; ++k) {
            std::size_t pivot = static_cast<std::size_t>(u(k));
            Rational f = col[pivot];
            if (f == 0) continue;
            for (std::size_t i = 1; i <= n; ++i) col[i] -= f * out(i, k);
        }
        std::size_t pivot = static_cast<std::size_t>(u(j));
        if (col[pivot] == 0) return std::nullopt;
        Rational scale = col[pivot];
        for (std::size_t i = 1; i <= n; ++i) out(i, j) = col[i] / scale;
    }
    return out;
}

std::vector<Rational> chart_coordinates(const Chart& chart, const RationalMatrix& x) {
    const std::size_t n = chart.n();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            bool one = chart.u()(j) == static_cast<int>(i);
            bool free = chart.variable_at(i, j).has_value();
            if (one && x(i, j) != 1) throw std::invalid_argument("chart_coordinates: pivot entry is not 1");
            if (!one && !free && x(i, j) != 0) throw std::invalid_argument("chart_coordinates: matrix not in chart form");
        }
    std::vector<Rational> point;
    for (auto [i, j] : chart.free_positions()) point.push_back(x(i, j));
    return point;
}

std::vector<std::size_t> reduced_word(const Permutation& w) {
    std::vector<std::size_t> word;
    Permutation cur = w;
    for (;;) {
        std::size_t i = 1;
        while (i < cur.size() && !cur.has_right_descent(i)) ++i;
        if (i == cur.size()) break;
        word.push_back(i);
        cur = cur.right_simple(i);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::optional<RationalMatrix> sample_richardson_point(const Permutation& tau, const Permutation& sigma,
                                                      std::uint64_t seed) {
    if (!bruhat_leq(tau, sigma)) throw std::invalid_argument("sample_richardson_point: tau is not below sigma");
    const std::size_t n = sigma.size();
    const std::vector<std::size_t> word = reduced_word(sigma);

    // Rightmost reduced subword for tau: positions carrying a simple reflection
    // in the product; the others carry lower unipotent factors y_i(t).
    std::vector<bool> uses_reflection(word.size(), false);
    Permutation rest = tau;
    for (std::size_t k = word.size(); k-- > 0;) {
        if (rest.has_right_descent(word[k])) {
            uses_reflection[k] = true;
            rest = rest.right_simple(word[k]);
        }
    }
    if (rest != Permutation::identity(n)) return std::nullopt;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numer(1, 5), denom(1, 3), sign(0, 1);
    for (int attempt = 0; attempt < 16; ++attempt) {
        RationalMatrix g = RationalMatrix::identity(n);
        for (std::size_t k = 0; k < word.size(); ++k) {
            std::size_t i = word[k];
            RationalMatrix factor = RationalMatrix::identity(n);
            if (uses_reflection[k]) {
                factor(i, i) = 0;
                factor(i + 1, i + 1) = 0;
                factor(i, i + 1) = -1;
                factor(i + 1, i) = 1;
            } else {
                Rational t(numer(rng), denom(rng));
                t.canonicalize();
                if (sign(rng)) t = -t;
                factor(i + 1, i) = t;
            }
            g = g * factor;
        }
        auto chart_form = to_chart_form(g, sigma);
        if (!chart_form) continue;
        CellPair cells = identify_cells(*chart_form);
        if (cells.sigma == sigma && cells.tau == tau) return chart_form;
    }
    return std::nullopt;
}

}  // namespace richardson
