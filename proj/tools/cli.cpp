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

#include "cli.hpp"

#include "trifmcw/csv.hpp"
#include "trifmcw/error.hpp"
#include "trifmcw/experiments.hpp"
#include "trifmcw/scenario.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

namespace trifmcw::cli
{

namespace
{

namespace fs = std::filesystem;

enum Exit : int
{
    kOk = 0,
    kUsage = 1,
    kConfig = 2,
    kFail = 3
};

struct Options
{
    std::string kind = "triangle";
    std::optional<double> bandwidth;
    double chirp = 0.1;
    std::optional<double> fs;
    std::uint64_t seed = 7;
    std::string out;
    std::optional<double> threshold_db;
    std::optional<double> speed;
    bool one_way = false;
    bool quiet = false;

    std::string scenario;
    std::size_t points = 64;
    std::optional<double> snr_db;
    std::string beat_csv;
    std::optional<std::size_t> window;
};

std::ofstream open_output(const fs::path &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError(path.string() + ": cannot open for writing");
    return out;
}

RangeMapping mapping_from(const Options &o)
{
    RangeMapping m;
    if (o.speed)
        m.propagation_speed_mps = *o.speed;
    m.round_trip = !o.one_way;
    m.validate();
    return m;
}

void check_threshold(const Options &o)
{
    if (o.threshold_db && !(*o.threshold_db <= 0.0))
        throw ConfigError("--threshold-db must be <= 0 (relative to the profile maximum)");
}

int cmd_waveform(const Options &o, std::ostream &out)
{
    const auto spec = WaveformSpec::make(parse_waveform_kind(o.kind), *o.bandwidth, o.chirp, o.fs);
    const fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
    const std::size_t w = o.window.value_or(default_spectrogram_window(spec));
    const auto sig = generate(spec);
    const auto sg = spectrogram(sig, w, std::max<std::size_t>(1, w / 2));

    fs::create_directories(dir);
    {
        auto f = open_output(dir / "waveform.csv");
        csv::write_waveform(f, sig);
    }
    {
        auto f = open_output(dir / "spectrogram.csv");
        csv::write_spectrogram(f, sg);
    }
    if (!o.quiet)
        out << "wrote " << sig.size() << " samples to " << (dir / "waveform.csv").string() << '\n';
    return kOk;
}

int cmd_simulate(const Options &o, std::ostream &out)
{
    check_threshold(o);
    ExperimentConfig cfg;
    if (o.bandwidth)
        cfg.bandwidth_hz = *o.bandwidth;
    cfg.chirp_duration_s = o.chirp;
    cfg.sample_rate_hz = o.fs;
    cfg.mapping = mapping_from(o);
    if (o.threshold_db)
        cfg.peaks.rel_threshold_db = *o.threshold_db;
    cfg.awgn_snr_db = o.snr_db;

    ExperimentReport rep;
    if (o.scenario == "four_path")
        rep = run_four_path(o.seed, cfg);
    else if (o.scenario == "sntr_sweep")
        rep = run_sntr_sweep(o.points, cfg);
    else if (o.scenario == "non_integer")
        rep = run_non_integer(o.seed, cfg);
    else if (o.scenario == "spacing_sweep")
        rep = run_spacing_sweep(cfg);
    else if (fs::is_regular_file(o.scenario))
    {
        auto sc = load_scenario(o.scenario);
        if (o.bandwidth)
            sc.bandwidth_hz = *o.bandwidth;
        if (o.fs)
            sc.sample_rate_hz = o.fs;
        if (o.speed)
            sc.mapping.propagation_speed_mps = *o.speed;
        if (o.one_way)
            sc.mapping.round_trip = false;
        if (o.threshold_db)
            sc.threshold_db = *o.threshold_db;
        rep = run_scenario(sc);
    }
    else
        throw ConfigError("unknown scenario '" + o.scenario +
                          "': expected four_path, sntr_sweep, non_integer, spacing_sweep or a scenario file");

    const fs::path dir = o.out.empty() ? fs::path("trifmcw_out") / rep.scenario : fs::path(o.out);
    write_outputs(rep, dir);
    if (!o.quiet)
        out << render_report(rep) << "outputs: " << dir.string() << '\n';
    return rep.passed() ? kOk : kFail;
}

int cmd_profile(const Options &o, std::ostream &out)
{
    check_threshold(o);
    std::ifstream in(o.beat_csv, std::ios::binary);
    if (!in)
        throw ConfigError(o.beat_csv + ": cannot open beat CSV");
    auto table = csv::read_beat(in, o.beat_csv);

    std::optional<double> rate = o.fs;
    if (table.sample_rate_hz && o.fs && std::abs(*table.sample_rate_hz - *o.fs) > 1e-6 * *o.fs)
        throw ConfigError(o.beat_csv + ": t column implies fs=" + csv::format_number(*table.sample_rate_hz) +
                          " Hz but --fs is " + csv::format_number(*o.fs) + " Hz");
    if (!rate)
        rate = table.sample_rate_hz;
    if (!rate)
        throw ConfigError(o.beat_csv + ": cannot infer fs from a single row; pass --fs");

    BeatSignal beat;
    beat.spec = WaveformSpec::make(parse_waveform_kind(o.kind), o.bandwidth.value_or(8000.0), o.chirp, rate);
    beat.sample_rate_hz = beat.spec.sample_rate_hz;
    beat.samples = std::move(table.samples);

    const auto profile = range_profile(beat, mapping_from(o));
    PeakOptions po;
    if (o.threshold_db)
        po.rel_threshold_db = *o.threshold_db;
    const auto peaks = detect_peaks(profile, po);

    const fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
    fs::create_directories(dir);
    {
        auto f = open_output(dir / "profile.csv");
        csv::write_profile(f, profile);
    }
    {
        auto f = open_output(dir / "peaks.csv");
        csv::write_peaks(f, peaks, profile);
    }
    if (!o.quiet)
    {
        out << peaks.size() << " peaks:";
        for (const auto &pk : peaks.peaks)
            out << ' ' << pk.bin << '@' << csv::format_number(pk.range_m) << 'm';
        out << '\n';
    }
    return kOk;
}

void add_common(CLI::App *cmd, Options &o)
{
    cmd->add_option("--chirp", o.chirp, "chirp duration T_c in seconds")->capture_default_str();
    cmd->add_option("--fs", o.fs, "sample rate in Hz");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_flag("-q,--quiet", o.quiet, "print nothing on success");
}

void add_mapping(CLI::App *cmd, Options &o)
{
    cmd->add_option("--threshold-db", o.threshold_db, "peak threshold relative to the maximum (dB, <= 0)");
    cmd->add_option("--speed", o.speed, "propagation speed in m/s (default 343)");
    cmd->add_flag("--one-way", o.one_way, "map delay to range without the round-trip halving");
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Triangle FMCW ranging simulator"};
    app.name("trifmcw");
    app.require_subcommand(1);

    auto *wf = app.add_subcommand("waveform", "write one symbol of a waveform and its spectrogram");
    wf->add_option("--kind", o.kind, "triangle, sawtooth, gentle, extended or linear")->capture_default_str();
    wf->add_option("--bandwidth", o.bandwidth, "sweep bandwidth B in Hz")->required();
    wf->add_option("--window", o.window, "spectrogram window length in samples");
    add_common(wf, o);

    auto *sim = app.add_subcommand("simulate", "run a named scenario or a scenario file");
    sim->add_option("scenario", o.scenario, "four_path, sntr_sweep, non_integer, spacing_sweep or a .scn file")
        ->required();
    sim->add_option("--bandwidth", o.bandwidth, "sweep bandwidth B in Hz (default 8000)");
    sim->add_option("--seed", o.seed, "seed for fading gains and noise")->capture_default_str();
    sim->add_option("--points", o.points, "sntr_sweep grid points")->capture_default_str();
    sim->add_option("--snr-db", o.snr_db, "add white noise at this SNR (off by default)");
    add_common(sim, o);
    add_mapping(sim, o);

    auto *prof = app.add_subcommand("profile", "range profile and peaks of a beat CSV");
    prof->add_option("beat_csv", o.beat_csv, "CSV with header n,t,re,im")->required();
    prof->add_option("--kind", o.kind, "waveform the beat was mixed against")->capture_default_str();
    prof->add_option("--bandwidth", o.bandwidth, "sweep bandwidth B in Hz (default 8000)");
    add_common(prof, o);
    add_mapping(prof, o);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try
    {
        if (*wf)
            return cmd_waveform(o, out);
        if (*sim)
        {
            if (o.points < 2)
                throw ConfigError("--points must be >= 2");
            return cmd_simulate(o, out);
        }
        return cmd_profile(o, out);
    }
    catch (const std::invalid_argument &e)
    {
        err << "error: " << e.what() << '\n';
        return kConfig;
    }
    catch (const std::domain_error &e)
    {
        err << "error: " << e.what() << '\n';
        return kConfig;
    }
    catch (const std::filesystem::filesystem_error &e)
    {
        err << "error: " << e.what() << '\n';
        return kConfig;
    }
}

} // namespace trifmcw::cli
