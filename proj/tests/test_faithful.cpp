#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "isorep/faithful.hpp"
#include "support.hpp"

using namespace isorep;

namespace {

std::vector<int> iota_vec(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

FiniteMetricSpace unit_square() {
    std::vector<Eigen::VectorXd> pts(4, Eigen::VectorXd(2));
    pts[0] << 0, 0;
    pts[1] << 1, 0;
    pts[2] << 1, 1;
    pts[3] << 0, 1;
    return cloud_to_metric(PointCloud(std::move(pts), 2));
}

}  // namespace

TEST_CASE("orbit kernel evaluates p at the basepoint displacement") {
    const auto p = KernelFunction::gaussian();

    SUBCASE("the identity always maps to 1") {
        const auto space = testsupport::two_point_space(1.0);
        const auto group = isometry_group(space);
        for (int a = 0; a < space.size(); ++a)
            CHECK(orbit_kernel(p, space, a)(group.identity()) == 1.0);
    }
    SUBCASE("swap on a two-point space") {
        const double d0 = 1.0;
        const auto space = testsupport::two_point_space(d0);
        const auto group = isometry_group(space);
        const auto pa = orbit_kernel(p, space, 0);
        CHECK(pa(group.element(1)) == std::exp(-d0 * d0));
    }
    SUBCASE("quarter turn of the unit square moves a corner by a side") {
        const auto space = unit_square();
        const auto group = isometry_group(space);
        const Isometry rotation{{1, 2, 3, 0}};
        REQUIRE(group.contains(rotation));
        const auto pa = orbit_kernel(p, space, 0);
        CHECK(pa(rotation) == std::exp(-1.0));
    }
    SUBCASE("invalid basepoint") {
        const auto space = testsupport::two_point_space(1.0);
        CHECK_THROWS_AS(orbit_kernel(p, space, 2), IndexOutOfRange);
        CHECK_THROWS_AS(orbit_kernel(p, space, -1), IndexOutOfRange);
    }
}

TEST_CASE("orbit-Gram identity: group Gram equals point Gram of the orbit") {
    const auto p = KernelFunction::gaussian();
    // Spaces whose distance matrices carry one double per congruence class,
    // so the identity d(g_i^-1 g_j a, a) = d(g_i a, g_j a) holds exactly.
    const auto spaces = {testsupport::regular_polygon_space(5),
                         testsupport::equilateral_triangle_matrix(),
                         testsupport::cube_space()};
    for (const auto& space : spaces) {
        const auto group = isometry_group(space);
        const auto subsets = {iota_vec(group.order()),
                              std::vector<int>{0, group.order() - 1, 1}};
        for (int a = 0; a < std::min(space.size(), 2); ++a) {
            const auto pa = orbit_kernel(p, space, a);
            for (const auto& subset : subsets) {
                const auto on_group = gram_on_group(pa, group, subset);
                std::vector<int> orbit;
                for (int gi : subset) orbit.push_back(group.element(gi)(a));
                const auto on_points = gram_on_points(p, space, orbit);
                CHECK(testsupport::exact_equal(on_group.entries(),
                                               on_points.entries()));
            }
        }
    }
}

TEST_CASE("orbit kernels are positive-definite on every test group") {
    const auto p = KernelFunction::gaussian();
    auto check_space = [&](const FiniteMetricSpace& space) {
        const auto group = isometry_group(space);
        const auto all = iota_vec(group.order());
        for (int a = 0; a < space.size(); ++a) {
            auto gram = gram_on_group(orbit_kernel(p, space, a), group, all);
            const auto cert = check_psd(gram, 1e-9);
            CAPTURE(a);
            CHECK(cert.is_psd);
        }
    };
    check_space(testsupport::two_point_space(1.0));
    check_space(testsupport::scalene_triangle());
    check_space(testsupport::unit_square_with_center());
    check_space(testsupport::simplex_space(4));
    check_space(testsupport::cube_space());
    for (int n = 3; n <= 8; ++n)
        check_space(testsupport::regular_polygon_space(n));
}

TEST_CASE("averaged kernel") {
    const auto p = KernelFunction::gaussian();
    const auto space = testsupport::two_point_space(1.0);
    const auto group = isometry_group(space);

    SUBCASE("value 1 at the identity") {
        const auto t = averaged_kernel(p, space, iota_vec(2));
        CHECK(t(group.identity()) == 1.0);
    }
    SUBCASE("single basepoint reduces to the orbit kernel") {
        const std::vector<int> one = {0};
        const auto t = averaged_kernel(p, space, one);
        const auto pa = orbit_kernel(p, space, 0);
        for (const Isometry& g : group.elements()) CHECK(t(g) == pa(g));
    }
    SUBCASE("swap averages the two orbit values") {
        const auto t = averaged_kernel(p, space, iota_vec(2));
        CHECK(t(group.element(1)) ==
              doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    }
    SUBCASE("averaged kernels stay positive-definite") {
        const auto hexagon = testsupport::regular_polygon_space(6);
        const auto hex_group = isometry_group(hexagon);
        const auto t = averaged_kernel(p, hexagon, iota_vec(6));
        auto gram = gram_on_group(t, hex_group, iota_vec(hex_group.order()));
        CHECK(check_psd(gram, 1e-9).is_psd);
    }
    SUBCASE("empty basepoints") {
        CHECK_THROWS_AS(averaged_kernel(p, space, std::vector<int>{}),
                        EmptyBasepoints);
    }
}

TEST_CASE("neighborhood membership") {
    const auto space = testsupport::two_point_space(1.0);
    const auto group = isometry_group(space);

    SUBCASE("epsilon above the diameter admits everything") {
        const auto members = neighborhood_members(group, {{0, 1}, 2.0});
        CHECK(members == iota_vec(2));
    }
    SUBCASE("epsilon below the minimum distance admits only the identity") {
        const auto members = neighborhood_members(group, {{0, 1}, 0.5});
        CHECK(members == std::vector<int>{0});
    }
    SUBCASE("single basepoint") {
        CHECK(neighborhood_members(group, {{0}, 1.5}) == iota_vec(2));
        CHECK(neighborhood_members(group, {{0}, 0.5}) == std::vector<int>{0});
    }
    SUBCASE("displacement exactly epsilon falls outside") {
        CHECK(neighborhood_members(group, {{0}, 1.0}) == std::vector<int>{0});
    }
    SUBCASE("spec validation") {
        CHECK_THROWS_AS(neighborhood_members(group, {{}, 1.0}), EmptyBasepoints);
        CHECK_THROWS_AS(neighborhood_members(group, {{0}, 0.0}), Error);
        CHECK_THROWS_AS(neighborhood_members(group, {{5}, 1.0}), IndexOutOfRange);
    }
    SUBCASE("elements fixing all basepoints stay inside") {
        const auto sq = testsupport::unit_square_with_center();
        const auto sq_group = isometry_group(sq);
        // Center alone: every isometry fixes it, so U is the whole group.
        const auto members = neighborhood_members(sq_group, {{4}, 0.1});
        CHECK(static_cast<int>(members.size()) == sq_group.order());
    }
}

TEST_CASE("separation certificate on the concrete two-point instance") {
    const auto space = testsupport::two_point_space(1.0);
    const auto group = isometry_group(space);
    const auto p = KernelFunction::gaussian();

    const auto cert = separation_certificate(group, p, {{0}, 0.5});
    CHECK(cert.n == 1);
    CHECK(cert.delta == doctest::Approx(1.0 - std::exp(-0.25)).epsilon(1e-15));
    CHECK(cert.bound == doctest::Approx(std::exp(-0.25)).epsilon(1e-15));
    REQUIRE(cert.achieved_sup.has_value());
    CHECK(*cert.achieved_sup == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(cert.members_of_u == std::vector<int>{0});
    CHECK(cert.pass);
    CHECK_FALSE(cert.vacuous());
}

TEST_CASE("separation certificate vacuous when U covers the group") {
    const auto space = testsupport::two_point_space(1.0);
    const auto group = isometry_group(space);
    const auto cert =
        separation_certificate(group, KernelFunction::gaussian(), {{0, 1}, 5.0});
    CHECK(cert.vacuous());
    CHECK(cert.pass);
    CHECK(static_cast<int>(cert.members_of_u.size()) == group.order());
}

TEST_CASE("separation certificate on the equilateral triangle") {
    const auto space = testsupport::equilateral_triangle_matrix(1.0);
    const auto group = isometry_group(space);
    const auto p = KernelFunction::gaussian();
    const auto cert = separation_certificate(group, p, {{0, 1, 2}, 0.5});

    const double delta = 1.0 - std::exp(-0.25);
    CHECK(cert.delta == doctest::Approx(delta).epsilon(1e-15));
    CHECK(cert.bound == doctest::Approx(1.0 - delta / 3.0).epsilon(1e-15));
    CHECK(cert.members_of_u == std::vector<int>{0});
    REQUIRE(cert.achieved_sup.has_value());
    // The max over the five nontrivial elements is a transposition fixing
    // one vertex: t = (1 + 2 exp(-1)) / 3.
    CHECK(*cert.achieved_sup ==
          doctest::Approx((1.0 + 2.0 * std::exp(-1.0)) / 3.0).epsilon(1e-14));
    CHECK(cert.pass);
}

TEST_CASE("no gap certificate, no separation certificate") {
    const auto space = testsupport::two_point_space(1.0);
    const auto group = isometry_group(space);
    const auto table = KernelFunction::from_table({{0.0, 1.0}, {1.0, 0.5}});
    // nothing tabulated at or beyond eps = 2
    CHECK_THROWS_AS(separation_certificate(group, table, {{0}, 2.0}),
                    NoGapCertified);
}

TEST_CASE("separation bound holds on every test space at the default spec") {
    const auto p = KernelFunction::gaussian();
    auto check_space = [&](const FiniteMetricSpace& space) {
        const auto group = isometry_group(space);
        const auto cert = separation_certificate(group, p, default_spec(space));
        CHECK(cert.pass);
        if (cert.achieved_sup)
            CHECK(*cert.achieved_sup <= cert.bound + 1e-12);
        // Default spec isolates the identity.
        CHECK(cert.members_of_u == std::vector<int>{0});
    };
    check_space(testsupport::two_point_space(1.0));
    check_space(testsupport::scalene_triangle());
    check_space(testsupport::unit_square_with_center());
    check_space(testsupport::simplex_space(4));
    check_space(testsupport::cube_space());
    for (int n = 3; n <= 8; ++n)
        check_space(testsupport::regular_polygon_space(n));
}

TEST_CASE("faithful representation") {
    const auto p = KernelFunction::gaussian();

    SUBCASE("trivial group is vacuously injective") {
        const auto space = testsupport::single_point_space();
        const auto group = isometry_group(space);
        const std::vector<NeighborhoodSpec> specs = {default_spec(space)};
        const auto result = faithful_representation(group, p, specs);
        CHECK(result.rep.dim() >= 1);
        CHECK(result.report.injective);
        CHECK(result.report.specs.size() == 1);
    }
    SUBCASE("two-point space separates the swap") {
        const auto space = testsupport::two_point_space(1.0);
        const auto group = isometry_group(space);
        const std::vector<NeighborhoodSpec> specs = {{{0}, 0.5}};
        const auto result = faithful_representation(group, p, specs);
        CHECK(result.report.injective);
        const auto& entry = result.report.specs[0];
        REQUIRE(entry.margin.has_value());
        CHECK(*entry.margin ==
              doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
        CHECK(entry.transfer_pass);
        const Eigen::MatrixXd diff = result.rep.matrix(0) - result.rep.matrix(1);
        CHECK(diff.cwiseAbs().maxCoeff() > 1e-6);
    }
    SUBCASE("equilateral triangle: all six matrices pairwise distinct") {
        const auto space = testsupport::equilateral_triangle_matrix(1.0);
        const auto group = isometry_group(space);
        const std::vector<NeighborhoodSpec> specs = {{{0, 1, 2}, 0.5}};
        const auto result = faithful_representation(group, p, specs);
        CHECK(result.report.injective);
        for (int g = 0; g < group.order(); ++g)
            for (int h = g + 1; h < group.order(); ++h)
                CHECK((result.rep.matrix(g) - result.rep.matrix(h))
                          .cwiseAbs()
                          .maxCoeff() > 1e-6);
    }
    SUBCASE("margin transfers through reconstruction") {
        const auto space = testsupport::regular_polygon_space(5);
        const auto group = isometry_group(space);
        const auto spec = default_spec(space);
        const std::vector<NeighborhoodSpec> specs = {spec};
        const auto result = faithful_representation(group, p, specs);
        const auto& entry = result.report.specs[0];
        REQUIRE(entry.margin.has_value());
        CHECK(*entry.margin > 0.0);
        CHECK(entry.transfer_pass);
        // 1 - bound <= margin and every g outside U respects it
        const double floor = 1.0 - entry.certificate.bound - 1e-8;
        for (int g = 1; g < group.order(); ++g)
            CHECK(std::abs(1.0 - reconstruct(result.rep, g)) >= floor);
    }
    SUBCASE("direct sum over two specs") {
        const auto space = testsupport::equilateral_triangle_matrix(1.0);
        const auto group = isometry_group(space);
        const std::vector<NeighborhoodSpec> specs = {{{0}, 0.5}, {{0, 1, 2}, 0.5}};
        const auto result = faithful_representation(group, p, specs);
        CHECK(result.report.specs.size() == 2);
        CHECK(result.rep.dim() == result.report.specs[0].gns_dim +
                                      result.report.specs[1].gns_dim);
        CHECK(result.report.injective);
    }
    SUBCASE("basepoints that see nothing produce a non-injective rep") {
        // The center of the square is fixed by every isometry, so its orbit
        // kernel is constant and the representation collapses.
        const auto space = testsupport::unit_square_with_center();
        const auto group = isometry_group(space);
        const std::vector<NeighborhoodSpec> specs = {{{4}, 0.1}};
        const auto result = faithful_representation(group, p, specs);
        CHECK_FALSE(result.report.injective);
        CHECK(result.report.witness_pair.has_value());
        CHECK(result.rep.dim() == 1);
        CHECK(result.report.specs[0].certificate.vacuous());
    }
    SUBCASE("empty spec list") {
        const auto space = testsupport::two_point_space(1.0);
        const auto group = isometry_group(space);
        CHECK_THROWS_AS(
            faithful_representation(group, p, std::vector<NeighborhoodSpec>{}),
            EmptyList);
    }
}

TEST_CASE("default spec family is injective on every test group") {
    const auto p = KernelFunction::gaussian();
    auto check_space = [&](const FiniteMetricSpace& space) {
        const auto group = isometry_group(space);
        const std::vector<NeighborhoodSpec> specs = {default_spec(space)};
        const auto result = faithful_representation(group, p, specs);
        CAPTURE(group.order());
        CHECK(result.report.injective);
        for (const auto& entry : result.report.specs) {
            CHECK(entry.certificate.pass);
            CHECK(entry.transfer_pass);
            if (entry.margin) CHECK(*entry.margin > 0.0);
        }
    };
    check_space(testsupport::two_point_space(1.0));
    check_space(testsupport::scalene_triangle());
    check_space(testsupport::unit_square_with_center());
    check_space(testsupport::cube_space());
    for (int n = 3; n <= 8; ++n)
        check_space(testsupport::regular_polygon_space(n));
}

TEST_CASE("default_spec") {
    const auto space = testsupport::regular_polygon_space(4);
    const auto spec = default_spec(space);
    CHECK(spec.basepoints == iota_vec(4));
    CHECK(spec.epsilon == space.min_dist() / 2.0);

    const auto lonely = default_spec(testsupport::single_point_space());
    CHECK(lonely.basepoints == std::vector<int>{0});
    CHECK(lonely.epsilon == 1.0);
}
