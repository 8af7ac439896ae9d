#include "tcmotion/tc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tcmotion {

namespace {

TCValue exact(int value, std::string source) { return {value, value, std::move(source)}; }

}  // namespace

TCValue tc_euclid_config(int d, int n) {
    if (d < 2 || n < 2) throw std::invalid_argument("TC(F(R^d, n)) formula needs d >= 2 and n >= 2");
    if (d % 2 == 1) return exact(2 * n - 1, "TC(F(R^d,n)) = 2n-1 for odd d");
    return exact(2 * n - 2, "TC(F(R^d,n)) = 2n-2 for even d");
}

bool is_y_shaped(const Tree& tree) {
    const auto essential = tree.essential_vertices();
    return essential.size() == 1 && tree.degree(essential.front()) == 3;
}

TCValue tc_tree_config(const Tree& tree, int n) {
    const int m = tree.essential_count();
    if (m == 0) throw std::invalid_argument("tree is homeomorphic to an arc");
    if (n < 1) throw std::invalid_argument("number of particles must be positive");
    if (n == 2 && is_y_shaped(tree)) return exact(2, "F(Y, 2) is homotopy equivalent to a circle");
    if (n >= 2 * m) return exact(2 * m + 1, "TC(F(tree,n)) = 2m+1 for n >= 2m");
    return {std::nullopt, 2 * m + 1, "upper bound 2m+1; value unknown for n < 2m"};
}

TCValue tc_sphere_product(int sphere_dim, int factors) {
    if (sphere_dim < 1 || factors < 1) throw std::invalid_argument("sphere product needs dimension >= 1 and k >= 1");
    if (sphere_dim % 2 == 0) return exact(2 * factors + 1, "TC((S^n)^k) = 2k+1 for even n");
    return exact(factors + 1, "TC((S^n)^k) = k+1 for odd n");
}

TCValue tc_s_euclid(int s, int d, int n) {
    if (s < 2 || d < 2 || n < 2) throw std::invalid_argument("higher TC formula needs s, d, n >= 2");
    if (d % 2 == 1) return exact(s * n - s + 1, "TC_s(F(R^d,n)) = sn-s+1 for odd d");
    return exact(s * n - s, "TC_s(F(R^d,n)) = sn-s for even d");
}

TCValue tc_surface(int genus, bool orientable) {
    if (orientable) {
        if (genus < 0) throw std::invalid_argument("orientable genus must be >= 0");
        if (genus <= 1) return exact(3, "TC(S^2) = TC(T^2) = 3");
        return exact(5, "TC of an orientable surface of genus >= 2 is 5");
    }
    if (genus < 1) throw std::invalid_argument("non-orientable genus must be >= 1");
    if (genus == 1) return exact(4, "TC(RP^2) = 4");
    return exact(5, "TC(N_g) = 5 for g >= 2");
}

std::pair<long long, long long> control_strategy_counts(int a, int k) {
    if (a < 2 || k < 1) throw std::invalid_argument("control strategy counts need a >= 2 and k >= 1");
    long long power = 1;
    for (int i = 0; i < k; ++i) power *= a;
    return {power, static_cast<long long>(k) * (a - 1) + 1};
}

Configuration sphere_product_embed(const std::vector<Vector>& units) {
    if (units.empty()) throw std::invalid_argument("need at least one unit vector");
    const std::size_t d = units.front().size();
    std::vector<Vector> points{Vector(d, 0.0)};
    double scale = 1.0;
    for (const auto& u : units) {
        if (u.size() != d) throw std::invalid_argument("unit vectors must share a dimension");
        if (std::abs(norm(u) - 1.0) > 1e-12) throw std::invalid_argument("input vectors must have unit norm");
        Vector next = points.back();
        for (std::size_t k = 0; k < d; ++k) next[k] += scale * u[k];
        points.push_back(std::move(next));
        scale *= 3.0;
    }
    return Configuration(static_cast<int>(d), points);
}

std::vector<Vector> sphere_product_retract(const Configuration& c) {
    std::vector<Vector> out;
    for (int i = 0; i + 1 < c.size(); ++i) {
        const auto a = c.point(i);
        const auto b = c.point(i + 1);
        Vector diff(a.size());
        for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = b[k] - a[k];
        out.push_back(normalized(diff));
    }
    return out;
}

}  // namespace tcmotion
