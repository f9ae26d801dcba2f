#include "richardson/sweep.hpp"

namespace richardson {

namespace {

void require_chart_form(const ChartMatrix& x, const Permutation& u) {
    const std::size_t n = u.size();
    if (x.n() != n) throw MalformedChart("chart matrix size does not match u");
    const Permutation uinv = u.inverse();
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t pivot = static_cast<std::size_t>(uinv(i));
        if (x(i, pivot) != Polynomial(x.context(), 1))
            throw MalformedChart("entry (" + std::to_string(i) + "," + std::to_string(pivot) + ") is not 1");
        for (std::size_t j = pivot + 1; j <= n; ++j)
            if (!x(i, j).is_zero()) throw MalformedChart("nonzero entry right of a pivot");
    }
}

void row_subtract(ChartMatrix& m, std::size_t target, std::size_t source, const Polynomial& factor) {
    for (std::size_t j = 1; j <= m.n(); ++j) {
        const Polynomial& s = m(source, j);
        if (s.is_zero()) continue;
        m(target, j) -= factor * s;
    }
}

}  // namespace

ChartMatrix eta1(const ChartMatrix& x, const Permutation& u) {
    require_chart_form(x, u);
    const std::size_t n = u.size();
    const Permutation uinv = u.inverse();
    ChartMatrix m = x;
    for (std::size_t r = n; r >= 1; --r) {
        std::size_t c = static_cast<std::size_t>(uinv(r));
        for (std::size_t i = 1; i < r; ++i) {
            Polynomial e = m(i, c);
            if (!e.is_zero()) row_subtract(m, i, r, e);
        }
    }
    return m;
}

ChartMatrix eta2(const ChartMatrix& x, const Permutation& u) {
    require_chart_form(x, u);
    const std::size_t n = u.size();
    const Permutation uinv = u.inverse();
    ChartMatrix m = x;
    for (std::size_t r = 1; r <= n; ++r) {
        std::size_t c = static_cast<std::size_t>(uinv(r));
        for (std::size_t i = r + 1; i <= n; ++i) {
            Polynomial e = m(i, c);
            if (!e.is_zero()) row_subtract(m, i, r, e);
        }
    }
    return m;
}

SweepImage sweep(const Chart& chart) {
    ChartMatrix x = generic_matrix(chart);
    return {chart.u(), eta1(x, chart.u()), eta2(x, chart.u())};
}

bool claim_structure_check(const Permutation& u) {
    Chart chart(u);
    SweepImage image = sweep(chart);
    auto allowed = [&](std::size_t i, std::size_t j, bool below) {
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < chart.free_positions().size(); ++k) {
            auto [a, b] = chart.free_positions()[k];
            bool ok = b > j || (b == j && (below ? a > i : a < i));
            if (ok) mask |= std::uint64_t{1} << k;
        }
        return mask;
    };
    auto check = [&](const ChartMatrix& m, const std::vector<Position>& positions, bool below) {
        for (auto [i, j] : positions) {
            std::size_t var = *chart.variable_at(i, j);
            Polynomial rest = m(i, j) - Polynomial::variable(chart.context(), var);
            if ((rest.support() & ~allowed(i, j, below)) != 0) return false;
        }
        return true;
    };
    return check(image.eta1, chart.d_up(), true) && check(image.eta2, chart.d_down(), false);
}

bool support_check(const SweepImage& image, const Chart& chart) {
    const std::size_t n = chart.n();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            bool one = chart.u()(j) == static_cast<int>(i);
            bool free = chart.variable_at(i, j).has_value();
            bool up = free && static_cast<int>(i) > chart.u()(j);
            bool down = free && static_cast<int>(i) < chart.u()(j);
            if (one) {
                if (image.eta1(i, j) != Polynomial(chart.context(), 1) || image.eta2(i, j) != Polynomial(chart.context(), 1))
                    return false;
                continue;
            }
            if (!up && !image.eta1(i, j).is_zero()) return false;
            if (!down && !image.eta2(i, j).is_zero()) return false;
        }
    return true;
}

ContextPtr image_context(const Chart& chart) {
    std::vector<std::string> names;
    for (auto [i, j] : chart.free_positions()) names.push_back(chart_variable_name(chart.n(), i, j, "y"));
    return make_context(std::move(names));
}

std::map<Position, Polynomial> recover(const SweepImage& image, const Chart& chart) {
    const std::size_t n = chart.n();
    if (image.u != chart.u()) throw MalformedChart("sweep image belongs to a different chart");
    ContextPtr ycontext = image_context(chart);
    Substitution known;  // chart variable index -> polynomial in y
    std::map<Position, Polynomial> out;

    auto solve = [&](std::size_t i, std::size_t j, const ChartMatrix& source) {
        std::size_t var = *chart.variable_at(i, j);
        Polynomial rest = source(i, j) - Polynomial::variable(chart.context(), var);
        if (rest.uses_variable(var)) throw MalformedChart("image entry is not of the form z + f");
        Polynomial value = Polynomial::variable(ycontext, var) - substitute(rest, known).with_context(ycontext);
        known.emplace(var, value);
        out.emplace(Position{i, j}, std::move(value));
    };

    for (std::size_t c = n; c >= 1; --c) {
        std::size_t b = static_cast<std::size_t>(chart.u()(c));
        for (std::size_t q = 1; q < b; ++q)
            if (chart.variable_at(q, c)) solve(q, c, image.eta2);
        for (std::size_t r = n; r > b; --r)
            if (chart.variable_at(r, c)) solve(r, c, image.eta1);
    }
    return out;
}

bool recovery_round_trip(const Chart& chart) {
    SweepImage image = sweep(chart);
    auto inverse = recover(image, chart);
    // y_ij -> image entry in z.
    std::vector<Polynomial> forward;
    for (auto [i, j] : chart.free_positions())
        forward.push_back(static_cast<int>(i) > chart.u()(j) ? image.eta1(i, j) : image.eta2(i, j));
    for (std::size_t k = 0; k < chart.free_positions().size(); ++k) {
        const Polynomial& r = inverse.at(chart.free_positions()[k]);
        Polynomial back = substitute(r, forward, chart.context());
        if (back != Polynomial::variable(chart.context(), k)) return false;
    }
    return true;
}

std::pair<RationalMatrix, RationalMatrix> eta_on_point(const RationalMatrix& x, const Permutation& u) {
    const std::size_t n = u.size();
    if (x.rows() != n || x.cols() != n) throw MalformedChart("point size does not match u");
    ChartMatrix m(n, nullptr);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) m(i, j) = Polynomial(nullptr, x(i, j));
    ChartMatrix a = eta1(m, u), b = eta2(m, u);
    return {a.evaluate({}), b.evaluate({})};
}

}  // namespace richardson
