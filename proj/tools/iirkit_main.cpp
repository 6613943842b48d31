#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iirkit/analysis.hpp"
#include "iirkit/design.hpp"
#include "iirkit/fft.hpp"
#include "iirkit/filter_file.hpp"
#include "iirkit/sos.hpp"
#include "iirkit/wav.hpp"

namespace {

using nlohmann::json;

std::vector<double> parse_edges(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad frequency value: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("expected at least one frequency");
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("io error: cannot write " + out_path);
    out << text;
}

std::string series_abscissa_label(const iirkit::ResponseSeries& series) {
    return series.kind == iirkit::ResponseKind::impulse ? "sample_index" : "frequency_hz";
}

std::string render_series(const iirkit::ResponseSeries& series, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << series_abscissa_label(series) << "," << iirkit::to_string(series.kind) << "\n";
        for (size_t i = 0; i < series.abscissa.size(); ++i) {
            os << fmt(series.abscissa[i]) << "," << fmt(series.ordinate[i]) << "\n";
        }
    } else {
        json j{{"kind", iirkit::to_string(series.kind)},
               {"abscissa", series.abscissa},
               {"ordinate", series.ordinate}};
        os << j.dump(2) << "\n";
    }
    return os.str();
}

std::string render_pole_zero(const iirkit::PoleZeroReport& report, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "type,real,imag,modulus\n";
        for (const auto& p : report.poles) {
            os << "pole," << fmt(p.real()) << "," << fmt(p.imag()) << "," << fmt(std::abs(p)) << "\n";
        }
        for (const auto& z : report.zeros) {
            os << "zero," << fmt(z.real()) << "," << fmt(z.imag()) << "," << fmt(std::abs(z)) << "\n";
        }
    } else {
        auto pack = [](const std::vector<iirkit::Complex>& roots) {
            json arr = json::array();
            for (const auto& r : roots) arr.push_back({r.real(), r.imag(), std::abs(r)});
            return arr;
        };
        json j{{"poles", pack(report.poles)}, {"zeros", pack(report.zeros)}};
        os << j.dump(2) << "\n";
    }
    return os.str();
}

std::string render_metrics(const iirkit::BandMetrics& m, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "passband_deviation_db,stopband_attenuation_db,transition_width_hz,"
              "phase_linearity_error_rad\n"
           << fmt(m.passband_deviation_db) << "," << fmt(m.stopband_attenuation_db) << ","
           << fmt(m.transition_width_hz) << "," << fmt(m.phase_linearity_error_rad) << "\n";
    } else {
        json j{{"passband_deviation_db", m.passband_deviation_db},
               {"stopband_attenuation_db", m.stopband_attenuation_db},
               {"transition_width_hz", m.transition_width_hz},
               {"phase_linearity_error_rad", m.phase_linearity_error_rad}};
        os << j.dump(2) << "\n";
    }
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"IIR filter design and speech filtering toolkit"};
    app.require_subcommand(1);

    // design
    auto* design = app.add_subcommand("design", "Design a filter and write its coefficients");
    std::string family_s = "butter", band_s = "lp", fp_s, fstop_s, design_out;
    double fs = 8000.0, rp = 2.0, rs = 35.0;
    std::optional<int> order;
    design->add_option("--family", family_s, "butter|cheby1|ellip");
    design->add_option("--band", band_s, "lp|hp|bp|bs");
    design->add_option("--fs", fs, "sample rate, Hz");
    design->add_option("--fp", fp_s, "passband edge(s), Hz (comma pair for bp/bs)")->required();
    design->add_option("--fstop", fstop_s, "stopband edge(s), Hz")->required();
    design->add_option("--rp", rp, "passband ripple, dB (default 2)");
    design->add_option("--rs", rs, "stopband attenuation, dB (default 35)");
    design->add_option("--order", order, "fixed order, bypasses order estimation");
    design->add_option("--out", design_out, "output coefficient file (JSON)")->required();

    // filter
    auto* filter = app.add_subcommand("filter", "Apply a designed filter to a WAV file");
    std::string coeff_path, wav_in, wav_out;
    filter->add_option("--coeff", coeff_path, "coefficient file")->required();
    filter->add_option("--in", wav_in, "input WAV")->required();
    filter->add_option("--out", wav_out, "output WAV")->required();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Emit response curves or metrics as plot data");
    std::string an_coeff, what = "magnitude", an_format = "csv", an_out;
    size_t points = 512;
    analyze->add_option("--coeff", an_coeff, "coefficient file")->required();
    analyze->add_option("--what", what, "impulse|magnitude|phase|groupdelay|polezero|metrics");
    analyze->add_option("--points", points, "number of points (default 512)");
    analyze->add_option("--format", an_format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    analyze->add_option("--out", an_out, "output path (stdout when omitted)");

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Magnitude spectrum of a WAV file");
    std::string sp_in, sp_format = "csv", sp_out;
    std::optional<size_t> nfft;
    spectrum_cmd->add_option("--in", sp_in, "input WAV")->required();
    spectrum_cmd->add_option("--nfft", nfft, "FFT size, power of two");
    spectrum_cmd->add_option("--format", sp_format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    spectrum_cmd->add_option("--out", sp_out, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (*design) {
        iirkit::FilterSpec spec;
        spec.family = iirkit::family_from_string(family_s);
        spec.band = iirkit::band_from_string(band_s);
        spec.sample_rate = fs;
        spec.passband_edges = parse_edges(fp_s);
        spec.stopband_edges = parse_edges(fstop_s);
        spec.passband_ripple_db = rp;
        spec.stopband_atten_db = rs;
        spec.order_override = order;

        iirkit::DesignPlan plan = iirkit::plan(spec);
        iirkit::DigitalFilter digital = iirkit::design_filter(spec);

        iirkit::FilterFile file;
        file.spec = spec;
        file.order = plan.order;
        file.cascade = iirkit::zpk_to_sos(digital);
        iirkit::save_filter_file(file, design_out);
    } else if (*filter) {
        iirkit::FilterFile file = iirkit::load_filter_file(coeff_path);
        iirkit::Signal signal = iirkit::read_wav(wav_in);
        if (signal.sample_rate != file.spec.sample_rate) {
            throw std::runtime_error("sample-rate mismatch: WAV is " +
                                     std::to_string(signal.sample_rate) + " Hz, coefficients are " +
                                     std::to_string(file.spec.sample_rate) + " Hz");
        }
        iirkit::FilterState state(file.cascade, signal.sample_rate);
        signal.samples = iirkit::filter_stream(state, file.cascade, signal.samples);
        iirkit::write_wav(signal, wav_out);
    } else if (*analyze) {
        iirkit::FilterFile file = iirkit::load_filter_file(an_coeff);
        double rate = file.spec.sample_rate;
        std::string text;
        if (what == "polezero") {
            text = render_pole_zero(iirkit::pole_zero(file.cascade), an_format);
        } else if (what == "metrics") {
            iirkit::DigitalFilter zpk = iirkit::sos_to_zpk(file.cascade, rate);
            text = render_metrics(iirkit::measure_band_metrics(zpk, file.spec), an_format);
        } else {
            iirkit::ResponseKind kind;
            if (what == "impulse") kind = iirkit::ResponseKind::impulse;
            else if (what == "magnitude") kind = iirkit::ResponseKind::magnitude_db;
            else if (what == "phase") kind = iirkit::ResponseKind::phase_rad;
            else if (what == "groupdelay") kind = iirkit::ResponseKind::group_delay_samples;
            else throw std::invalid_argument("invalid kind: " + what);
            text = render_series(iirkit::response_series(file.cascade, kind, points, rate),
                                 an_format);
        }
        emit(text, an_out);
    } else if (*spectrum_cmd) {
        iirkit::Signal signal = iirkit::read_wav(sp_in);
        iirkit::ResponseSeries series = iirkit::spectrum(signal, nfft);
        emit(render_series(series, sp_format), sp_out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
