// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The trifmcw Authors
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

#include "trifmcw/experiments.hpp"

#include "trifmcw/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace trifmcw
{

namespace
{

using csv::format_number;

bool on_grid(double tau_s, double fs)
{
    const double x = tau_s * fs;
    return std::abs(x - std::round(x)) < 1e-9;
}

double uniform53(std::mt19937_64 &rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void add_awgn(ComplexSignal &sig, double snr_db, std::uint64_t seed)
{
    double power = 0.0;
    for (const auto &z : sig.samples)
        power += std::norm(z);
    if (sig.samples.empty() || !(power > 0.0))
        return;
    power /= static_cast<double>(sig.samples.size());
    const double sigma = std::sqrt(power / std::pow(10.0, snr_db / 10.0) / 2.0);

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (auto &z : sig.samples)
    {
        const double u1 = uniform53(rng);
        const double u2 = uniform53(rng);
        const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        const double a = 2.0 * std::numbers::pi * u2;
        z += sigma * cdouble(r * std::cos(a), r * std::sin(a));
    }
}

std::string join_bins(const PeakSet &peaks)
{
    std::string out = "{";
    for (std::size_t i = 0; i < peaks.size(); ++i)
        out += (i ? "," : "") + std::to_string(peaks.peaks[i].bin);
    return out + "}";
}

std::string join_bins(const std::vector<std::size_t> &bins)
{
    std::string out = "{";
    for (std::size_t i = 0; i < bins.size(); ++i)
        out += (i ? "," : "") + std::to_string(bins[i]);
    return out + "}";
}

std::size_t peaks_within(const PeakSet &peaks, double lo_m, double hi_m)
{
    return static_cast<std::size_t>(std::count_if(peaks.peaks.begin(), peaks.peaks.end(), [&](const Peak &pk) {
        return pk.range_m >= lo_m && pk.range_m <= hi_m;
    }));
}

// Largest distance from a detected peak to its nearest true range.
double max_peak_error(const PeakSet &peaks, const std::vector<double> &truth_m)
{
    double worst = 0.0;
    for (const auto &pk : peaks.peaks)
    {
        double best = std::numeric_limits<double>::infinity();
        for (double r : truth_m)
            best = std::min(best, std::abs(pk.range_m - r));
        worst = std::max(worst, best);
    }
    return worst;
}

// Every true range has a detected peak within tolerance.
bool all_truth_matched(const PeakSet &peaks, const std::vector<double> &truth_m, double tol_m)
{
    return std::all_of(truth_m.begin(), truth_m.end(), [&](double r) {
        return std::any_of(peaks.peaks.begin(), peaks.peaks.end(),
                           [&](const Peak &pk) { return std::abs(pk.range_m - r) <= tol_m; });
    });
}

Assertion make_assertion(std::string criterion, std::string description, std::string measured, std::string bound,
                         bool pass)
{
    return {std::move(criterion), std::move(description), std::move(measured), std::move(bound), pass};
}

nlohmann::ordered_json number_or_null(double v)
{
    if (std::isfinite(v))
        return v;
    return nullptr;
}

constexpr const char *kLiPlaceholder = "not implemented (method unspecified)";

} // namespace

bool ExperimentReport::passed() const
{
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion &a) { return a.pass; });
}

const MethodRun *ExperimentReport::find(const std::string &label) const
{
    for (const auto &m : methods)
        if (m.label == label)
            return &m;
    return nullptr;
}

MethodRun run_method(WaveformKind kind, const ChannelModel &channel, const ExperimentConfig &cfg,
                     std::optional<double> sample_rate_hz, std::string label)
{
    MethodRun run;
    run.label = label.empty() ? std::string(to_string(kind)) : std::move(label);
    run.spec = WaveformSpec::make(kind, cfg.bandwidth_hz, cfg.chirp_duration_s,
                                  sample_rate_hz ? sample_rate_hz : cfg.sample_rate_hz);

    const auto tx = generate(run.spec);
    auto rx = apply(tx, channel);
    if (cfg.awgn_snr_db)
        add_awgn(rx, *cfg.awgn_snr_db, channel.seed());
    run.beat = mix(tx, rx, run.spec);
    run.profile = range_profile(run.beat, cfg.mapping);
    run.peaks = detect_peaks(run.profile, cfg.peaks);

    if (channel.taps().size() == 1)
    {
        const double b = run.profile.bin_of_delay(channel.taps().front().delay_s);
        const double p = std::round(b);
        if (std::abs(b - p) < 1e-9 && p < static_cast<double>(run.profile.bins()))
        {
            const auto bin = static_cast<std::size_t>(p);
            run.sntr_db = sntr(run.profile, bin);
            run.dominance = energy_dominance(run.beat, bin);
        }
    }
    return run;
}

ExperimentReport run_four_path(std::uint64_t seed, const ExperimentConfig &cfg)
{
    ExperimentReport rep;
    rep.scenario = "four_path";

    const std::vector<std::size_t> bins{48, 50, 56, 57};
    std::vector<double> delays;
    std::vector<ChannelTap> taps;
    for (auto p : bins)
    {
        const double tau = delay_for_index(static_cast<double>(p), cfg.bandwidth_hz);
        delays.push_back(tau);
        taps.push_back({tau, {1.0, 0.0}});
        rep.ground_truth_ranges_m.push_back(cfg.mapping.range_for_delay(tau));
    }
    const ChannelModel unit(taps, seed);
    const ChannelModel fading = rayleigh_taps(delays, seed);

    const WaveformKind kinds[] = {WaveformKind::Triangle, WaveformKind::Sawtooth, WaveformKind::Gentle};
    for (auto k : kinds)
        rep.methods.push_back(run_method(k, unit, cfg));
    for (auto k : kinds)
        rep.methods.push_back(run_method(k, fading, cfg, std::nullopt, std::string(to_string(k)) + "_rayleigh"));

    const auto &tri = *rep.find("triangle");
    std::vector<std::size_t> found;
    for (const auto &pk : tri.peaks.peaks)
        found.push_back(pk.bin);
    rep.assertions.push_back(make_assertion("AC-1", "triangle detects exactly the four tap bins", join_bins(tri.peaks),
                                            join_bins(bins), found == bins));

    const double r56 = rep.ground_truth_ranges_m[2];
    const double r57 = rep.ground_truth_ranges_m[3];
    for (const char *name : {"sawtooth", "gentle"})
    {
        const auto &m = *rep.find(name);
        rep.assertions.push_back(make_assertion("AC-1", std::string(name) + " detects at most 3 peaks",
                                                std::to_string(m.peaks.size()) + " " + join_bins(m.peaks), "<= 3",
                                                m.peaks.size() <= 3));
        const double half = 0.5 * m.profile.bin_spacing_m;
        const auto near = peaks_within(m.peaks, r56 - half, r57 + half);
        rep.assertions.push_back(make_assertion("AC-1", std::string(name) + " merges the p=56/57 pair",
                                                std::to_string(near) + " peaks in [" + format_number(r56 - half) +
                                                    ", " + format_number(r57 + half) + "] m",
                                                "< 2", near < 2));
    }
    const auto &gen = *rep.find("gentle");
    const double ratio = gen.profile.bin_spacing_m / tri.profile.bin_spacing_m;
    rep.assertions.push_back(make_assertion("AC-1", "gentle bin spacing is twice the triangle spacing",
                                            format_number(ratio), "2", std::abs(ratio - 2.0) < 1e-12));

    for (auto k : kinds)
    {
        const std::string label = std::string(to_string(k)) + "_rayleigh";
        rep.notes.push_back(label + " (informational): " + std::to_string(rep.find(label)->peaks.size()) +
                            " peaks " + join_bins(rep.find(label)->peaks));
    }
    rep.notes.push_back(std::string("triangle_li: ") + kLiPlaceholder);
    return rep;
}

ExperimentReport run_sntr_sweep(std::size_t points, const ExperimentConfig &cfg)
{
    if (points < 2)
        throw ArgumentError("sntr sweep needs at least 2 points");

    ExperimentReport rep;
    rep.scenario = "sntr_sweep";

    const auto spec = WaveformSpec::make(WaveformKind::Triangle, cfg.bandwidth_hz, cfg.chirp_duration_s,
                                         cfg.sample_rate_hz);
    const double p_per_tc = 2.0 * cfg.bandwidth_hz * cfg.chirp_duration_s; // p at tau = T_c
    const double p_first = std::max(1.0, std::ceil(p_per_tc / static_cast<double>(spec.chirp_samples()) - 1e-9));
    const double p_last = std::floor(0.45 * p_per_tc + 1e-9);
    if (p_last < p_first)
        throw ConfigError("sntr sweep: no integer p in the tau/T_c range [1/N_c, 0.45]");

    std::vector<std::size_t> ps;
    for (std::size_t i = 0; i < points; ++i)
    {
        const double p =
            std::round(p_first + (p_last - p_first) * static_cast<double>(i) / static_cast<double>(points - 1));
        const auto pi = static_cast<std::size_t>(p);
        if (ps.empty() || ps.back() != pi)
            ps.push_back(pi);
    }

    csv::Table table;
    table.header = {"tau_over_tc", "p", "sntr_db"};
    for (auto p : ps)
    {
        const double tau = delay_for_index(static_cast<double>(p), cfg.bandwidth_hz);
        const ChannelModel ch(std::vector<ChannelTap>{{tau, {1.0, 0.0}}});
        const auto run = run_method(WaveformKind::Triangle, ch, cfg);
        const double s = sntr(run.profile, p);
        const SntrPoint pt{static_cast<double>(p) / p_per_tc, p, s};
        rep.sntr_points.push_back(pt);
        table.rows.push_back({format_number(pt.tau_over_tc), std::to_string(p), format_number(s)});
    }
    rep.table = std::move(table);
    rep.table_name = "sntr_sweep";

    constexpr double upper = 0.40 + 1e-12;
    double floor_min = std::numeric_limits<double>::infinity();
    double at_tau = 0.0;
    double running_min = std::numeric_limits<double>::infinity();
    double worst_rise = 0.0;
    double rise_tau = 0.0;
    for (const auto &pt : rep.sntr_points)
    {
        if (pt.tau_over_tc > upper)
            continue;
        if (pt.sntr_db < floor_min)
        {
            floor_min = pt.sntr_db;
            at_tau = pt.tau_over_tc;
        }
        if (pt.tau_over_tc < 0.01 - 1e-12)
            continue;
        running_min = std::min(running_min, pt.sntr_db);
        if (pt.sntr_db - running_min > worst_rise)
        {
            worst_rise = pt.sntr_db - running_min;
            rise_tau = pt.tau_over_tc;
        }
    }
    rep.assertions.push_back(make_assertion("AC-5", "minimum SNTR for tau/T_c <= 0.40",
                                            format_number(floor_min) + " dB at tau/T_c=" + format_number(at_tau),
                                            ">= -7.4 dB", floor_min >= -7.4));
    rep.assertions.push_back(make_assertion(
        "AC-5", "SNTR non-increasing over tau/T_c in [0.01, 0.40] within ripple",
        "largest rise above running minimum " + format_number(worst_rise) + " dB at tau/T_c=" +
            format_number(rise_tau),
        "<= 1 dB", worst_rise <= 1.0));
    return rep;
}

ExperimentReport run_non_integer(std::uint64_t seed, const ExperimentConfig &cfg)
{
    ExperimentReport rep;
    rep.scenario = "non_integer";

    const double fs = cfg.sample_rate_hz.value_or(kNonIntegerSampleRate);
    const std::vector<double> ranges{0.059, 0.082};
    std::vector<ChannelTap> taps;
    for (std::size_t i = 0; i < ranges.size(); ++i)
    {
        const double tau = cfg.mapping.delay_for_range(ranges[i]);
        if (!on_grid(tau, fs))
        {
            std::ostringstream os;
            os.precision(12);
            os << "non_integer: tap " << i << " at " << ranges[i] << " m has delay " << tau << " s = " << tau * fs
               << " samples at fs=" << fs << " Hz, not on the sample grid; override --fs so that delay * fs is an "
               << "integer (" << kNonIntegerSampleRate << " Hz works at c = 343 m/s)";
            throw ConfigError(os.str());
        }
        taps.push_back({tau, {1.0, 0.0}});
        rep.ground_truth_ranges_m.push_back(cfg.mapping.range_for_delay(tau));
    }
    const ChannelModel ch(taps, seed);

    csv::Table table;
    table.header = {"method", "bin", "range_m", "error_m", "error_bins"};
    for (auto k : {WaveformKind::Linear, WaveformKind::Extended, WaveformKind::Triangle})
    {
        rep.methods.push_back(run_method(k, ch, cfg, fs));
        const auto &m = rep.methods.back();
        for (const auto &pk : m.peaks.peaks)
        {
            const double err = max_peak_error(PeakSet{{pk}}, rep.ground_truth_ranges_m);
            table.rows.push_back({m.label, std::to_string(pk.bin), format_number(pk.range_m), format_number(err),
                                  format_number(err / m.profile.bin_spacing_m)});
        }
    }
    rep.table = std::move(table);
    rep.table_name = "peak_errors";

    for (const char *name : {"triangle", "extended"})
    {
        const auto &m = *rep.find(name);
        rep.assertions.push_back(make_assertion("AC-7", std::string(name) + " detects 2 peaks",
                                                std::to_string(m.peaks.size()) + " " + join_bins(m.peaks), "== 2",
                                                m.peaks.size() == 2));
        const double err = max_peak_error(m.peaks, rep.ground_truth_ranges_m);
        const double bin = m.profile.bin_spacing_m;
        rep.assertions.push_back(make_assertion(
            "AC-7", std::string(name) + " per-peak range error",
            format_number(err) + " m (" + format_number(err / bin) + " bins)", "<= 1 bin (" + format_number(bin) + " m)",
            !m.peaks.empty() && err <= bin));
    }
    const auto &lin = *rep.find("linear");
    const bool resolved = lin.peaks.size() >= 2 &&
                          all_truth_matched(lin.peaks, rep.ground_truth_ranges_m, lin.profile.bin_spacing_m);
    rep.assertions.push_back(make_assertion("AC-7", "linear baseline reports fewer or displaced peaks",
                                            std::to_string(lin.peaks.size()) + " " + join_bins(lin.peaks),
                                            "< 2 peaks or a range off by > 1 bin", !resolved));
    return rep;
}

double estimate_spacing(const PeakSet &peaks)
{
    if (peaks.size() < 2)
        return 0.0;
    auto sorted = peaks.peaks;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Peak &a, const Peak &b) { return a.power > b.power; });
    return std::abs(sorted[0].range_m - sorted[1].range_m);
}

ExperimentReport run_spacing_sweep(const ExperimentConfig &cfg)
{
    ExperimentReport rep;
    rep.scenario = "spacing_sweep";

    constexpr double r1 = 0.40;
    constexpr double step = 0.01;
    constexpr std::size_t positions = 11;
    const WaveformKind kinds[] = {WaveformKind::Triangle, WaveformKind::Sawtooth, WaveformKind::Gentle,
                                  WaveformKind::Extended};
    // 1 cm range steps land on the sample grid at multiples of this rate.
    const double grid_rate = 1.0 / cfg.mapping.delay_for_range(step);

    std::vector<double> rates;
    for (auto k : kinds)
    {
        rep.methods_in_sweep.emplace_back(to_string(k));
        if (cfg.sample_rate_hz)
            rates.push_back(*cfg.sample_rate_hz);
        else
        {
            const double min_rate = WaveformSpec::default_sample_rate(k, cfg.bandwidth_hz);
            rates.push_back(grid_rate * std::ceil(min_rate / grid_rate - 1e-9));
        }
    }

    csv::Table table;
    table.header = {"true_spacing_m"};
    for (const auto &m : rep.methods_in_sweep)
        table.header.push_back(m);
    table.header.push_back("triangle_li");
    table.header.push_back("single_peak");

    for (std::size_t i = 0; i < positions; ++i)
    {
        const double r2 = r1 + step * static_cast<double>(positions - 1 - i);
        const double tau1 = cfg.mapping.delay_for_range(r1);
        const double tau2 = cfg.mapping.delay_for_range(r2);
        std::vector<ChannelTap> taps;
        if (i + 1 == positions)
            taps.push_back({tau1, {2.0, 0.0}}); // co-located taps add
        else
            taps = {{tau1, {1.0, 0.0}}, {tau2, {1.0, 0.0}}};
        const ChannelModel ch(taps);

        SpacingPoint pt;
        pt.true_spacing_m = r2 - r1;
        std::vector<std::string> row{format_number(pt.true_spacing_m)};
        std::string single;
        for (std::size_t k = 0; k < std::size(kinds); ++k)
        {
            const auto run = run_method(kinds[k], ch, cfg, rates[k]);
            const double est = estimate_spacing(run.peaks);
            pt.estimate_m.push_back(est);
            pt.degenerate.push_back(run.peaks.size() < 2);
            row.push_back(format_number(est));
            if (run.peaks.size() < 2)
                single += (single.empty() ? "" : ";") + rep.methods_in_sweep[k];
        }
        row.push_back(kLiPlaceholder);
        row.push_back(single.empty() ? "-" : single);
        table.rows.push_back(std::move(row));
        rep.spacing_points.push_back(std::move(pt));
    }
    rep.table = std::move(table);
    rep.table_name = "spacing_sweep";

    for (std::size_t k = 0; k < rep.methods_in_sweep.size(); ++k)
    {
        double sum = 0.0;
        for (std::size_t i = positions - 3; i < positions; ++i)
            sum += std::abs(rep.spacing_points[i].estimate_m[k] - rep.spacing_points[i].true_spacing_m);
        rep.mean_tight_error_m.push_back(sum / 3.0);
        rep.notes.push_back(rep.methods_in_sweep[k] + " mean abs spacing error over the three tightest positions: " +
                            format_number(sum / 3.0) + " m");
    }
    rep.notes.push_back(std::string("triangle_li: ") + kLiPlaceholder);

    const auto &e = rep.mean_tight_error_m;
    rep.assertions.push_back(make_assertion("AC-9", "mean tight-spacing error triangle < sawtooth",
                                            format_number(e[0]) + " m vs " + format_number(e[1]) + " m", "<",
                                            e[0] < e[1]));
    rep.assertions.push_back(make_assertion("AC-9", "mean tight-spacing error sawtooth < gentle",
                                            format_number(e[1]) + " m vs " + format_number(e[2]) + " m", "<",
                                            e[1] < e[2]));
    return rep;
}

ExperimentReport run_scenario(const Scenario &sc)
{
    ExperimentReport rep;
    rep.scenario = sc.name;

    ExperimentConfig cfg;
    cfg.bandwidth_hz = sc.bandwidth_hz;
    cfg.chirp_duration_s = sc.chirp_duration_s;
    cfg.sample_rate_hz = sc.sample_rate_hz;
    cfg.mapping = sc.mapping;
    cfg.mapping.validate();
    cfg.peaks.rel_threshold_db = sc.threshold_db;

    auto fail = [&](const TapConfig &t, const std::string &what) -> void {
        throw ConfigError(sc.source + ":" + std::to_string(t.line) + ": " + what);
    };

    std::vector<double> delays;
    for (std::size_t i = 0; i < sc.taps.size(); ++i)
    {
        const double tau = sc.delay_of(sc.taps[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(delays[j] - tau) <= 1e-9 * std::max(delays[j], tau))
                fail(sc.taps[i], "tap " + std::to_string(i) + " repeats the delay of tap " + std::to_string(j) +
                                     "; merge them into one tap");
        delays.push_back(tau);
    }

    // Every method must realise every delay on its own sample grid.
    for (auto kind : sc.methods)
    {
        const auto spec = WaveformSpec::make(kind, cfg.bandwidth_hz, cfg.chirp_duration_s, cfg.sample_rate_hz);
        const double fs = spec.sample_rate_hz;
        for (std::size_t i = 0; i < sc.taps.size(); ++i)
        {
            std::ostringstream os;
            os.precision(12);
            if (!on_grid(delays[i], fs))
            {
                os << "tap " << i << " delay " << delays[i] << " s is " << delays[i] * fs << " samples at fs=" << fs
                   << " Hz (" << to_string(kind) << "), not on the sample grid; override fs";
                std::optional<double> hint;
                for (int m = 2; m <= 1000 && !hint; ++m)
                {
                    const double cand = fs * m;
                    const double nc = cand * cfg.chirp_duration_s;
                    if (std::abs(nc - std::round(nc)) > 1e-9 * std::max(1.0, nc))
                        continue;
                    if (std::all_of(delays.begin(), delays.end(), [&](double d) { return on_grid(d, cand); }))
                        hint = cand;
                }
                if (hint)
                    os << ", e.g. --fs " << *hint;
                else
                    os << " so that delay * fs is an integer";
                fail(sc.taps[i], os.str());
            }
            if (std::round(delays[i] * fs) >= static_cast<double>(spec.signal_samples()))
            {
                os << "tap " << i << " delay " << delays[i] << " s is not shorter than the " << to_string(kind)
                   << " signal (" << spec.signal_duration() << " s)";
                fail(sc.taps[i], os.str());
            }
        }
    }

    std::vector<double> fading_delays;
    for (std::size_t i = 0; i < sc.taps.size(); ++i)
        if (sc.taps[i].rayleigh)
            fading_delays.push_back(delays[i]);
    const ChannelModel fading = rayleigh_taps(fading_delays, sc.seed);

    std::vector<ChannelTap> taps;
    for (std::size_t i = 0; i < sc.taps.size(); ++i)
    {
        cdouble g = sc.taps[i].gain;
        if (sc.taps[i].rayleigh)
            for (const auto &f : fading.taps())
                if (f.delay_s == delays[i])
                    g = f.gain;
        taps.push_back({delays[i], g});
        rep.ground_truth_ranges_m.push_back(cfg.mapping.range_for_delay(delays[i]));
    }
    const ChannelModel ch(taps, sc.seed);
    if (ch.empty())
    {
        rep.degenerate = true;
        rep.notes.push_back("degenerate input: empty channel");
    }

    for (auto kind : sc.methods)
        rep.methods.push_back(run_method(kind, ch, cfg));
    return rep;
}

std::string render_report(const ExperimentReport &rep)
{
    std::ostringstream os;
    os << "scenario: " << rep.scenario << '\n';
    if (rep.degenerate)
        os << "degenerate: yes\n";
    if (!rep.ground_truth_ranges_m.empty())
    {
        os << "true ranges m:";
        for (double r : rep.ground_truth_ranges_m)
            os << ' ' << format_number(r);
        os << '\n';
    }
    for (const auto &m : rep.methods)
    {
        os << "method " << m.label << ": fs " << format_number(m.spec.sample_rate_hz) << " Hz, bin "
           << format_number(m.profile.bin_spacing_m) << " m, " << m.peaks.size() << " peaks";
        for (const auto &pk : m.peaks.peaks)
            os << ' ' << pk.bin << '@' << format_number(pk.range_m);
        if (m.sntr_db)
            os << ", sntr " << format_number(*m.sntr_db) << " dB";
        if (m.dominance)
            os << ", dominance " << format_number(*m.dominance);
        os << '\n';
    }
    for (const auto &n : rep.notes)
        os << "note: " << n << '\n';
    for (const auto &a : rep.assertions)
        os << (a.pass ? "PASS " : "FAIL ") << a.criterion << ' ' << a.description << ": measured " << a.measured
           << "; bound " << a.bound << '\n';
    os << "RESULT: " << (rep.passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

void write_outputs(const ExperimentReport &rep, const std::filesystem::path &dir)
{
    std::filesystem::create_directories(dir);
    auto open = [&](const std::string &name) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out)
            throw ConfigError((dir / name).string() + ": cannot open for writing");
        return out;
    };

    nlohmann::ordered_json j;
    j["scenario"] = rep.scenario;
    j["degenerate"] = rep.degenerate;
    j["ground_truth_ranges_m"] = rep.ground_truth_ranges_m;
    j["methods"] = nlohmann::ordered_json::array();
    for (const auto &m : rep.methods)
    {
        {
            auto out = open("profile_" + m.label + ".csv");
            csv::write_profile(out, m.profile);
        }
        {
            auto out = open("beat_" + m.label + ".csv");
            csv::write_beat(out, m.beat);
        }
        {
            auto out = open("peaks_" + m.label + ".csv");
            csv::write_peaks(out, m.peaks, m.profile);
        }
        nlohmann::ordered_json jm;
        jm["label"] = m.label;
        jm["kind"] = std::string(to_string(m.spec.kind));
        jm["sample_rate_hz"] = m.spec.sample_rate_hz;
        jm["bin_spacing_m"] = m.profile.bin_spacing_m;
        jm["peak_count"] = m.peaks.size();
        jm["peaks"] = nlohmann::ordered_json::array();
        for (const auto &pk : m.peaks.peaks)
            jm["peaks"].push_back({{"bin", pk.bin}, {"range_m", pk.range_m}, {"power", pk.power}});
        jm["sntr_db"] = m.sntr_db ? number_or_null(*m.sntr_db) : nullptr;
        jm["dominance"] = m.dominance ? number_or_null(*m.dominance) : nullptr;
        j["methods"].push_back(std::move(jm));
    }
    if (!rep.mean_tight_error_m.empty())
    {
        nlohmann::ordered_json e;
        for (std::size_t k = 0; k < rep.methods_in_sweep.size(); ++k)
            e[rep.methods_in_sweep[k]] = rep.mean_tight_error_m[k];
        e["triangle_li"] = kLiPlaceholder;
        j["mean_tight_spacing_error_m"] = std::move(e);
    }
    j["assertions"] = nlohmann::ordered_json::array();
    for (const auto &a : rep.assertions)
        j["assertions"].push_back({{"criterion", a.criterion},
                                   {"description", a.description},
                                   {"measured", a.measured},
                                   {"bound", a.bound},
                                   {"pass", a.pass}});
    j["notes"] = rep.notes;
    j["passed"] = rep.passed();

    if (rep.table)
    {
        auto out = open(rep.table_name + ".csv");
        csv::write_table(out, *rep.table);
    }
    {
        auto out = open("metrics.json");
        out << j.dump(2) << '\n';
    }
    {
        auto out = open("report.txt");
        out << render_report(rep);
    }
}

} // namespace trifmcw
