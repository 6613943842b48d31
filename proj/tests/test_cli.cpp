#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "iirkit/fft.hpp"
#include "iirkit/wav.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = IIRKIT_CLI_PATH;

struct Workdir {
    fs::path dir;
    Workdir() {
        dir = fs::temp_directory_path() / ("iirkit_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Workdir() { fs::remove_all(dir); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::string& args, const std::string& stdout_path = "/dev/null",
            const std::string& stderr_path = "/dev/null") {
    std::string cmd = kCli + " " + args + " >" + stdout_path + " 2>" + stderr_path;
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("design writes an order-5 coefficient file") {
    Workdir wd;
    std::string out = wd.file("lp.json");
    int rc = run_cli("design --family butter --band lp --fs 8000 --fp 2000 --fstop 3000 --out " + out);
    REQUIRE(rc == 0);

    json j = json::parse(std::ifstream(out));
    CHECK(j["order"] == 5);
    CHECK(j["family"] == "butterworth");
    CHECK(j["band"] == "lowpass");
    CHECK(j["schema_version"] == 1);
    CHECK(j["sections"].size() == 3);
    for (const auto& row : j["sections"]) {
        REQUIRE(row.size() == 6);
        CHECK(row[3] == 1.0);
    }
}

TEST_CASE("design output is deterministic") {
    Workdir wd;
    std::string a = wd.file("a.json"), b = wd.file("b.json");
    std::string flags = "design --family ellip --band bp --fs 8000 --fp 1500,2000 --fstop 1000,2500 --out ";
    REQUIRE(run_cli(flags + a) == 0);
    REQUIRE(run_cli(flags + b) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("design honors --order and rejects reversed edges") {
    Workdir wd;
    std::string out = wd.file("lp5.json");
    REQUIRE(run_cli("design --band lp --fs 8000 --fp 2000 --fstop 3000 --order 7 --out " + out) == 0);
    CHECK(json::parse(std::ifstream(out))["order"] == 7);

    std::string err = wd.file("err.txt");
    int rc = run_cli("design --band lp --fs 8000 --fp 3000 --fstop 2000 --out " + wd.file("x.json"),
                     "/dev/null", err);
    CHECK(rc == 2);
    CHECK(slurp(err).rfind("error:", 0) == 0);
}

TEST_CASE("filter applies a lowpass to a two-tone wav") {
    Workdir wd;
    iirkit::Signal s;
    s.sample_rate = 8000.0;
    for (int i = 0; i < 8000; ++i) {
        double t = i / 8000.0;
        s.samples.push_back(0.4 * std::sin(2.0 * M_PI * 700.0 * t) +
                            0.4 * std::sin(2.0 * M_PI * 3500.0 * t));
    }
    std::string in_wav = wd.file("in.wav"), out_wav = wd.file("out.wav");
    iirkit::write_wav(s, in_wav);

    std::string coeff = wd.file("lp.json");
    REQUIRE(run_cli("design --family butter --band lp --fs 8000 --fp 2000 --fstop 3000 --out " + coeff) == 0);
    REQUIRE(run_cli("filter --coeff " + coeff + " --in " + in_wav + " --out " + out_wav) == 0);

    iirkit::ResponseSeries spec = iirkit::spectrum(iirkit::read_wav(out_wav));
    double at700 = -1e9, at3500 = -1e9;
    for (size_t k = 0; k < spec.abscissa.size(); ++k) {
        if (std::fabs(spec.abscissa[k] - 700.0) < 5.0) at700 = std::max(at700, spec.ordinate[k]);
        if (std::fabs(spec.abscissa[k] - 3500.0) < 5.0) at3500 = std::max(at3500, spec.ordinate[k]);
    }
    CHECK(at700 - at3500 >= 35.0);
}

TEST_CASE("filter rejects a sample-rate mismatch") {
    Workdir wd;
    iirkit::Signal s;
    s.sample_rate = 16000.0;
    s.samples.assign(100, 0.1);
    std::string in_wav = wd.file("in16k.wav");
    iirkit::write_wav(s, in_wav);

    std::string coeff = wd.file("lp.json");
    REQUIRE(run_cli("design --band lp --fs 8000 --fp 2000 --fstop 3000 --out " + coeff) == 0);
    std::string err = wd.file("err.txt");
    CHECK(run_cli("filter --coeff " + coeff + " --in " + in_wav + " --out " + wd.file("o.wav"),
                  "/dev/null", err) == 2);
    CHECK(slurp(err).rfind("error:", 0) == 0);
}

TEST_CASE("analyze emits csv series and pole-zero data") {
    Workdir wd;
    std::string coeff = wd.file("lp.json");
    REQUIRE(run_cli("design --family butter --band lp --fs 8000 --fp 2000 --fstop 3000 --out " + coeff) == 0);

    std::string mag = wd.file("mag.csv");
    REQUIRE(run_cli("analyze --coeff " + coeff + " --what magnitude --points 8 --out " + mag) == 0);
    std::string text = slurp(mag);
    CHECK(text.rfind("frequency_hz,magnitude_db", 0) == 0);
    int lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 9);  // header + 8 rows

    std::string pz = wd.file("pz.csv");
    REQUIRE(run_cli("analyze --coeff " + coeff + " --what polezero --out " + pz) == 0);
    std::istringstream in(slurp(pz));
    std::string line;
    std::getline(in, line);
    CHECK(line == "type,real,imag,modulus");
    int zero_rows = 0;
    while (std::getline(in, line)) {
        if (line.rfind("zero,", 0) == 0) {
            ++zero_rows;
            CHECK(line.find("zero,-1,") == 0);
        }
    }
    CHECK(zero_rows == 5);

    std::string err = wd.file("err.txt");
    CHECK(run_cli("analyze --coeff " + coeff + " --what bogus", "/dev/null", err) == 2);
    CHECK(slurp(err).rfind("error:", 0) == 0);
}

TEST_CASE("analyze metrics reports spec compliance") {
    Workdir wd;
    std::string coeff = wd.file("lp.json");
    REQUIRE(run_cli("design --family cheby1 --band lp --fs 8000 --fp 2000 --fstop 3000 --out " + coeff) == 0);
    std::string out = wd.file("metrics.json");
    REQUIRE(run_cli("analyze --coeff " + coeff + " --what metrics --format json --out " + out) == 0);
    json j = json::parse(std::ifstream(out));
    CHECK(j["passband_deviation_db"].get<double>() <= 2.0 + 1e-6);
    CHECK(j["stopband_attenuation_db"].get<double>() >= 35.0 - 1e-6);
}

TEST_CASE("spectrum command") {
    Workdir wd;
    iirkit::Signal s;
    s.sample_rate = 8000.0;
    for (int i = 0; i < 1024; ++i) {
        s.samples.push_back(0.7 * std::sin(2.0 * M_PI * 1000.0 * i / 8000.0));
    }
    std::string in_wav = wd.file("tone.wav");
    iirkit::write_wav(s, in_wav);

    std::string out = wd.file("spec.csv");
    REQUIRE(run_cli("spectrum --in " + in_wav + " --out " + out) == 0);
    std::istringstream in(slurp(out));
    std::string line;
    std::getline(in, line);
    CHECK(line == "frequency_hz,spectrum_db");
    double peak_freq = -1.0, peak_db = -1e9;
    while (std::getline(in, line)) {
        size_t comma = line.find(',');
        double f = std::stod(line.substr(0, comma));
        double db = std::stod(line.substr(comma + 1));
        if (db > peak_db) {
            peak_db = db;
            peak_freq = f;
        }
    }
    CHECK(peak_freq == doctest::Approx(1000.0).epsilon(1e-6));

    std::string err = wd.file("err.txt");
    CHECK(run_cli("spectrum --in " + in_wav + " --nfft 1000", "/dev/null", err) == 2);
    CHECK(slurp(err).rfind("error:", 0) == 0);
    CHECK(run_cli("spectrum --in " + wd.file("missing.wav"), "/dev/null", err) == 2);
}

TEST_CASE("identity coefficients pass audio through unchanged") {
    Workdir wd;
    // hand-written identity coefficient file
    json j{{"schema_version", 1},
           {"family", "butterworth"},
           {"band", "lowpass"},
           {"sample_rate", 8000.0},
           {"order", 0},
           {"spec",
            {{"passband_edges", {2000.0}},
             {"stopband_edges", {3000.0}},
             {"passband_ripple_db", 2.0},
             {"stopband_atten_db", 35.0}}},
           {"overall_gain", 1.0},
           {"sections", json::array({json::array({1.0, 0.0, 0.0, 1.0, 0.0, 0.0})})}};
    std::string coeff = wd.file("identity.json");
    std::ofstream(coeff) << j.dump(2);

    iirkit::Signal s;
    s.sample_rate = 8000.0;
    std::srand(3);
    for (int i = 0; i < 1000; ++i) {
        s.samples.push_back((std::rand() % 65536 - 32768) / 32768.0);
    }
    std::string in_wav = wd.file("in.wav"), out_wav = wd.file("out.wav");
    iirkit::write_wav(s, in_wav);
    REQUIRE(run_cli("filter --coeff " + coeff + " --in " + in_wav + " --out " + out_wav) == 0);
    CHECK(slurp(in_wav) == slurp(out_wav));
}
