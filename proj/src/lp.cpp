#include "tightframe/lp.hpp"

#include <stdexcept>

#include "tightframe/errors.hpp"

namespace tightframe {

PackingLpResult solve_packing_lp(int rows, const std::vector<std::vector<int>>& cols,
                                 const std::vector<Rational>& b, const std::vector<Rational>& c) {
    int m = static_cast<int>(cols.size());
    if (static_cast<int>(b.size()) != rows || static_cast<int>(c.size()) != m)
        throw InputError("lp dimension mismatch");
    for (const auto& bi : b)
        if (bi < 0) throw InputError("lp requires b >= 0");

    // basis starts as the slack identity; Binv maintained explicitly
    std::vector<int> basic(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) basic[static_cast<size_t>(i)] = m + i;
    std::vector<std::vector<Rational>> binv(static_cast<size_t>(rows),
                                            std::vector<Rational>(static_cast<size_t>(rows), Rational(0)));
    for (int i = 0; i < rows; ++i) binv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    std::vector<Rational> xb = b;

    auto cost_of = [&](int var) { return var < m ? c[static_cast<size_t>(var)] : Rational(0); };

    PackingLpResult result;
    while (true) {
        // y = c_B Binv
        std::vector<Rational> y(static_cast<size_t>(rows), Rational(0));
        for (int i = 0; i < rows; ++i) {
            Rational cb = cost_of(basic[static_cast<size_t>(i)]);
            if (cb == 0) continue;
            for (int j = 0; j < rows; ++j) y[static_cast<size_t>(j)] += cb * binv[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        // Bland: first variable with positive reduced cost
        int enter = -1;
        for (int j = 0; j < m + rows && enter < 0; ++j) {
            Rational rc;
            if (j < m) {
                rc = c[static_cast<size_t>(j)];
                for (int r : cols[static_cast<size_t>(j)]) rc -= y[static_cast<size_t>(r)];
            } else {
                rc = -y[static_cast<size_t>(j - m)];
            }
            if (rc > 0) enter = j;
        }
        if (enter < 0) {
            result.y = y;
            break;
        }
        // direction d = Binv a_enter
        std::vector<Rational> d(static_cast<size_t>(rows), Rational(0));
        if (enter < m) {
            for (int r : cols[static_cast<size_t>(enter)])
                for (int i = 0; i < rows; ++i) d[static_cast<size_t>(i)] += binv[static_cast<size_t>(i)][static_cast<size_t>(r)];
        } else {
            for (int i = 0; i < rows; ++i) d[static_cast<size_t>(i)] = binv[static_cast<size_t>(i)][static_cast<size_t>(enter - m)];
        }
        // ratio test, ties by smallest basic variable id
        int leave = -1;
        Rational best;
        for (int i = 0; i < rows; ++i) {
            if (d[static_cast<size_t>(i)] <= 0) continue;
            Rational ratio = xb[static_cast<size_t>(i)] / d[static_cast<size_t>(i)];
            if (leave < 0 || ratio < best ||
                (ratio == best && basic[static_cast<size_t>(i)] < basic[static_cast<size_t>(leave)])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) throw std::logic_error("packing lp unbounded");
        // pivot
        Rational piv = d[static_cast<size_t>(leave)];
        for (int j = 0; j < rows; ++j) binv[static_cast<size_t>(leave)][static_cast<size_t>(j)] /= piv;
        xb[static_cast<size_t>(leave)] /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == leave || d[static_cast<size_t>(i)] == 0) continue;
            Rational f = d[static_cast<size_t>(i)];
            for (int j = 0; j < rows; ++j)
                binv[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * binv[static_cast<size_t>(leave)][static_cast<size_t>(j)];
            xb[static_cast<size_t>(i)] -= f * xb[static_cast<size_t>(leave)];
        }
        basic[static_cast<size_t>(leave)] = enter;
        ++result.iterations;
    }

    result.x.assign(static_cast<size_t>(m), Rational(0));
    result.objective = 0;
    for (int i = 0; i < rows; ++i) {
        if (basic[static_cast<size_t>(i)] < m) result.x[static_cast<size_t>(basic[static_cast<size_t>(i)])] = xb[static_cast<size_t>(i)];
        result.objective += cost_of(basic[static_cast<size_t>(i)]) * xb[static_cast<size_t>(i)];
    }
    return result;
}

bool verify_packing_certificate(int rows, const std::vector<std::vector<int>>& cols,
                                const std::vector<Rational>& b, const std::vector<Rational>& c,
                                const PackingLpResult& r) {
    int m = static_cast<int>(cols.size());
    for (const auto& xi : r.x)
        if (xi < 0) return false;
    std::vector<Rational> load(static_cast<size_t>(rows), Rational(0));
    Rational primal = 0;
    for (int j = 0; j < m; ++j) {
        for (int row : cols[static_cast<size_t>(j)]) load[static_cast<size_t>(row)] += r.x[static_cast<size_t>(j)];
        primal += c[static_cast<size_t>(j)] * r.x[static_cast<size_t>(j)];
    }
    for (int i = 0; i < rows; ++i)
        if (load[static_cast<size_t>(i)] > b[static_cast<size_t>(i)]) return false;
    Rational dual = 0;
    for (int i = 0; i < rows; ++i) {
        if (r.y[static_cast<size_t>(i)] < 0) return false;
        dual += r.y[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
    }
    for (int j = 0; j < m; ++j) {
        Rational covered = 0;
        for (int row : cols[static_cast<size_t>(j)]) covered += r.y[static_cast<size_t>(row)];
        if (covered < c[static_cast<size_t>(j)]) return false;
    }
    return primal == r.objective && dual == r.objective;
}

} // namespace tightframe
