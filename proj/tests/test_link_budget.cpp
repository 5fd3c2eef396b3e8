// SPDX-License-Identifier: Apache-2.0
//
// irslink: received-power models for conventional and IRS-assisted small cells
// Copyright (C) 2026 The irslink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cmath>
#include <limits>
#include <random>

#include "oracle/frozen_values.hpp"
#include "oracle/reference_oracle.hpp"
#include "test_support.hpp"

using namespace irslink;
using testsupport::near_rel;

TEST(Units, WavelengthAnchors)
{
    RadioConfig cfg = testsupport::unity_radio();
    EXPECT_EQ(wavelength(cfg), 1.0);
    cfg.carrier_frequency_hz = 2.0 * speed_of_light_mps;
    EXPECT_EQ(wavelength(cfg), 0.5);
    EXPECT_TRUE(near_rel(wavelength(testsupport::radio_3p5ghz()), frozen::lambda_3p5ghz_m));
}

TEST(Units, WavelengthRejectsNonPositiveFrequency)
{
    RadioConfig cfg = testsupport::unity_radio();
    cfg.carrier_frequency_hz = 0.0;
    EXPECT_THROW(wavelength(cfg), DomainError);
    cfg.carrier_frequency_hz = -1.0;
    EXPECT_THROW(wavelength(cfg), DomainError);
}

TEST(Units, DbmAnchors)
{
    EXPECT_EQ(watts_to_dbm(0.001), 0.0);
    EXPECT_TRUE(near_rel(watts_to_dbm(1.0), 30.0));
    EXPECT_TRUE(near_rel(watts_to_dbm(frozen::conventional_3p5ghz_w), frozen::conventional_3p5ghz_dbm));
    EXPECT_TRUE(near_rel(dbm_to_watts(30.0), 1.0));
}

TEST(Units, NonPositiveWattsMapToNegativeInfinity)
{
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_EQ(watts_to_dbm(0.0), -inf);
    EXPECT_EQ(watts_to_dbm(-1.0), -inf);
    EXPECT_FALSE(std::isnan(watts_to_dbm(std::nan(""))));
    EXPECT_EQ(dbm_to_watts(-inf), 0.0);
}

TEST(Units, DbmRoundTripProperty)
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> exponent(-20.0, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const double p = std::pow(10.0, exponent(gen));
        ASSERT_TRUE(near_rel(dbm_to_watts(watts_to_dbm(p)), p)) << "p = " << p;
    }
    EXPECT_TRUE(near_rel(dbm_to_watts(watts_to_dbm(1e-20)), 1e-20));
    EXPECT_TRUE(near_rel(dbm_to_watts(watts_to_dbm(1e3)), 1e3));
}

TEST(Geometry, DistanceAnchors)
{
    EXPECT_EQ(euclidean_distance({1, 2, 3}, {1, 2, 3}), 0.0);
    EXPECT_EQ(euclidean_distance({0, 0, 0}, {3, 4, 0}), 5.0);
    EXPECT_EQ(euclidean_distance({1, 2, 3}, {4, 6, 15}), 13.0);
}

TEST(Geometry, DistanceIsSymmetric)
{
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> coord(-1e3, 1e3);
    for (int i = 0; i < 500; ++i) {
        const Point3 a{coord(gen), coord(gen), coord(gen)};
        const Point3 b{coord(gen), coord(gen), coord(gen)};
        ASSERT_EQ(euclidean_distance(a, b), euclidean_distance(b, a));
        ASSERT_GE(euclidean_distance(a, b), 0.0);
    }
}

TEST(Geometry, LinkDistances)
{
    LinkGeometry g{{0, 0, 0}, Point3{0, 3, 4}, {0, 3, 16}};
    EXPECT_EQ(g.direct_distance(), euclidean_distance({0, 0, 0}, {0, 3, 16}));
    EXPECT_EQ(g.bs_irs_distance(), 5.0);
    EXPECT_EQ(g.irs_device_distance(), 12.0);
    g.irs.reset();
    EXPECT_THROW(g.bs_irs_distance(), DomainError);
}

TEST(Geometry, PointAlongRay)
{
    const Point3 p = point_along_ray({1, 1, 1}, {4, 5, 1}, 10.0);
    EXPECT_TRUE(near_rel(euclidean_distance({1, 1, 1}, p), 10.0));
    EXPECT_TRUE(near_rel(p.x, 7.0));
    EXPECT_TRUE(near_rel(p.y, 9.0));
    EXPECT_THROW(point_along_ray({1, 1, 1}, {1, 1, 1}, 1.0), DomainError);
}

TEST(Conventional, ZeroFadingGivesZero)
{
    EXPECT_EQ(conventional_rx_power(testsupport::radio_3p5ghz(), 10.0, 0.0, 3.0), 0.0);
}

TEST(Conventional, AllUnityIsInverseSixteenPiSquared)
{
    EXPECT_TRUE(near_rel(conventional_rx_power(testsupport::unity_radio(), 1.0, 1.0, 2.0), frozen::inv_16_pi_sq));
}

TEST(Conventional, ThreePointFiveGigahertzExample)
{
    const double w = conventional_rx_power(testsupport::radio_3p5ghz(), 10.0, 1.0, 2.0);
    EXPECT_TRUE(near_rel(w, frozen::conventional_3p5ghz_w));
    EXPECT_NEAR(watts_to_dbm(w), -22.66, 0.005);
}

TEST(Conventional, DomainErrors)
{
    const RadioConfig cfg = testsupport::radio_3p5ghz();
    EXPECT_THROW(conventional_rx_power(cfg, 0.0, 1.0, 2.0), DomainError);
    EXPECT_THROW(conventional_rx_power(cfg, -5.0, 1.0, 2.0), DomainError);
    EXPECT_THROW(conventional_rx_power(cfg, 5.0, -0.1, 2.0), DomainError);
    EXPECT_THROW(conventional_rx_power(cfg, 5.0, 1.0, 0.5), DomainError);
    RadioConfig bad = cfg;
    bad.transmit_power_w = 0.0;
    EXPECT_THROW(conventional_rx_power(bad, 5.0, 1.0, 2.0), DomainError);
}

TEST(Conventional, MonotoneAndLinear)
{
    const RadioConfig cfg = testsupport::radio_3p5ghz();
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> dist(1.01, 500.0), alpha(1.0, 5.0), h(0.01, 10.0);
    for (int i = 0; i < 300; ++i) {
        const double d = dist(gen), a = alpha(gen), hv = h(gen);
        const double p = conventional_rx_power(cfg, d, hv, a);
        ASSERT_GT(p, conventional_rx_power(cfg, d * 1.01, hv, a));
        ASSERT_GT(p, conventional_rx_power(cfg, d, hv, a + 0.01));
        ASSERT_TRUE(near_rel(conventional_rx_power(cfg, d, 3.0 * hv, a), 3.0 * p));
        RadioConfig twice = cfg;
        twice.transmit_power_w *= 2.0;
        ASSERT_TRUE(near_rel(conventional_rx_power(twice, d, hv, a), 2.0 * p));
    }
}

TEST(Conventional, DistanceScalingLaw)
{
    const RadioConfig cfg = testsupport::radio_3p5ghz();
    for (double alpha : {2.0, 2.7, 3.0, 4.0})
        for (double d : {0.5, 3.0, 42.0}) {
            const double k = 2.5;
            EXPECT_TRUE(near_rel(conventional_rx_power(cfg, k * d, 1.0, alpha),
                                 conventional_rx_power(cfg, d, 1.0, alpha) / std::pow(k, alpha)));
        }
}

TEST(ScatteringGain, Anchors)
{
    IrsPanel p = testsupport::unity_panel();
    p.element_len_x_m = p.element_len_y_m = 0.3;
    EXPECT_TRUE(near_rel(irs_scattering_gain(p, 0.3), 4.0 * pi));
    p.element_len_x_m = p.element_len_y_m = 0.15;
    EXPECT_TRUE(near_rel(irs_scattering_gain(p, 0.3), pi));
    EXPECT_TRUE(near_rel(irs_scattering_gain(testsupport::panel_32x32(), frozen::lambda_3p5ghz_m), frozen::gain_0p01_3p5ghz));
    EXPECT_THROW(irs_scattering_gain(p, 0.0), DomainError);
}

TEST(Irs, AllUnityIsInverseSixteenPiSquared)
{
    EXPECT_TRUE(near_rel(irs_rx_power(testsupport::unity_radio(), testsupport::unity_panel(), 1.0, 1.0),
                         frozen::inv_16_pi_sq));
}

TEST(Irs, ThreePointFiveGigahertzExample)
{
    const double w = irs_rx_power(testsupport::radio_3p5ghz(), testsupport::panel_32x32(), 20.0, 15.0);
    EXPECT_TRUE(near_rel(w, frozen::irs_3p5ghz_32x32_w));
    EXPECT_TRUE(near_rel(watts_to_dbm(w), frozen::irs_3p5ghz_32x32_dbm));
}

TEST(Irs, DomainErrors)
{
    const RadioConfig cfg = testsupport::radio_3p5ghz();
    const IrsPanel panel = testsupport::panel_32x32();
    EXPECT_THROW(irs_rx_power(cfg, panel, 0.0, 1.0), DomainError);
    EXPECT_THROW(irs_rx_power(cfg, panel, 1.0, -1.0), DomainError);
    IrsPanel bad = panel;
    bad.theta_t_rad = pi / 2;
    EXPECT_THROW(irs_rx_power(cfg, bad, 1.0, 1.0), DomainError);
    bad = panel;
    bad.reflection_coeff = 1.5;
    EXPECT_THROW(irs_rx_power(cfg, bad, 1.0, 1.0), DomainError);
    bad = panel;
    bad.elements_m = 0;
    EXPECT_THROW(irs_rx_power(cfg, bad, 1.0, 1.0), DomainError);
}

TEST(Irs, PowerVanishesMonotonicallyTowardGrazingAngle)
{
    const RadioConfig cfg = testsupport::radio_3p5ghz();
    IrsPanel panel = testsupport::panel_32x32(0.0, 0.0);
    double previous = irs_rx_power(cfg, panel, 20.0, 15.0);
    for (double gap : {1e-1, 1e-2, 1e-4, 1e-8, 1e-12}) {
        panel.theta_t_rad = pi / 2 - gap;
        const double p = irs_rx_power(cfg, panel, 20.0, 15.0);
        EXPECT_LT(p, previous);
        previous = p;
    }
    EXPECT_LT(previous, 1e-20);
}

TEST(Irs, MonotonicityProperties)
{
    const RadioConfig cfg = testsupport::radio_3p5ghz();
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> dist(0.5, 300.0), angle(0.0, 1.5), coeff(0.05, 0.95);
    std::uniform_int_distribution<std::uint32_t> count(1, 256);
    for (int i = 0; i < 300; ++i) {
        IrsPanel p{count(gen), count(gen), 0.01, 0.02, coeff(gen), angle(gen), angle(gen)};
        const double d1 = dist(gen), d2 = dist(gen);
        const double base = irs_rx_power(cfg, p, d1, d2);
        ASSERT_GT(base, irs_rx_power(cfg, p, d1 * 1.001, d2));
        ASSERT_GT(base, irs_rx_power(cfg, p, d1, d2 * 1.001));
        IrsPanel q = p;
        q.theta_t_rad += 0.01;
        ASSERT_GT(base, irs_rx_power(cfg, q, d1, d2));
        q = p;
        q.theta_r_rad += 0.01;
        ASSERT_GT(base, irs_rx_power(cfg, q, d1, d2));
        q = p;
        q.elements_m += 1;
        ASSERT_LT(base, irs_rx_power(cfg, q, d1, d2));
        q = p;
        q.elements_n += 1;
        ASSERT_LT(base, irs_rx_power(cfg, q, d1, d2));
        q = p;
        q.reflection_coeff += 0.01;
        ASSERT_LT(base, irs_rx_power(cfg, q, d1, d2));
    }
}

TEST(Irs, HopSymmetryIsBitExact)
{
    const RadioConfig cfg = testsupport::radio_3p5ghz();
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> dist(0.5, 300.0), angle(0.0, 1.5);
    for (int i = 0; i < 500; ++i) {
        IrsPanel p = testsupport::panel_32x32(angle(gen), angle(gen));
        const double d1 = dist(gen), d2 = dist(gen);
        IrsPanel swapped = p;
        std::swap(swapped.theta_t_rad, swapped.theta_r_rad);
        ASSERT_EQ(irs_rx_power(cfg, p, d1, d2), irs_rx_power(cfg, swapped, d2, d1));
    }
}

TEST(Irs, HopScalingLaw)
{
    const RadioConfig cfg = testsupport::radio_3p5ghz();
    const IrsPanel p = testsupport::panel_32x32();
    for (double k : {0.5, 2.0, 3.7})
        EXPECT_TRUE(near_rel(irs_rx_power(cfg, p, 20.0 * k, 15.0 * k), irs_rx_power(cfg, p, 20.0, 15.0) / std::pow(k, 4)));
}

TEST(Irs, FortyFiveBeatsSixtyAtFormulaLevel)
{
    const RadioConfig cfg = testsupport::radio_3p5ghz();
    const double p45 = irs_rx_power(cfg, testsupport::panel_32x32(deg_to_rad(45), deg_to_rad(45)), 20.0, 15.0);
    const double p60 = irs_rx_power(cfg, testsupport::panel_32x32(deg_to_rad(60), deg_to_rad(60)), 20.0, 15.0);
    EXPECT_GT(p45, p60);
}

TEST(OracleEquivalence, RandomDrawsMatchReferenceExpression)
{
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> logf(8.0, 11.5), logp(-3.0, 2.0), dist(0.5, 500.0), alpha(1.0, 5.0),
        h(0.0, 5.0), gain(0.5, 50.0), len(1e-3, 0.1), coeff(0.01, 1.0), angle(0.0, 1.55);
    std::uniform_int_distribution<std::uint32_t> count(1, 512);
    for (int i = 0; i < 100; ++i) {
        const RadioConfig cfg{std::pow(10.0, logf(gen)), std::pow(10.0, logp(gen)), 1e6, gain(gen), gain(gen)};
        const double d = dist(gen), a = alpha(gen), hv = h(gen);
        const long double ref = oracle::conventional(cfg.transmit_power_w, cfg.carrier_frequency_hz, hv, d, a);
        ASSERT_TRUE(near_rel(conventional_rx_power(cfg, d, hv, a), static_cast<double>(ref)));

        const IrsPanel p{count(gen), count(gen), len(gen), len(gen), coeff(gen), angle(gen), angle(gen)};
        const double d1 = dist(gen), d2 = dist(gen);
        const long double iref = oracle::irs(cfg.transmit_power_w, cfg.carrier_frequency_hz, cfg.tx_gain_linear,
                                             cfg.rx_gain_linear, p.elements_m, p.elements_n, p.element_len_x_m,
                                             p.element_len_y_m, p.reflection_coeff, p.theta_t_rad, p.theta_r_rad, d1, d2);
        ASSERT_TRUE(near_rel(irs_rx_power(cfg, p, d1, d2), static_cast<double>(iref)));
    }
}

TEST(PowerSample, DbmSentinel)
{
    const PowerSample zero = PowerSample::conventional(3.0, 0.0);
    EXPECT_EQ(zero.power_dbm, -std::numeric_limits<double>::infinity());
    const PowerSample s = PowerSample::irs(20.0, 15.0, 1e-3);
    EXPECT_EQ(s.model, ModelTag::IrsAssisted);
    EXPECT_EQ(s.distance_m, 15.0);
    EXPECT_EQ(s.power_dbm, 0.0);
}
