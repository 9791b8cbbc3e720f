#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hillpt/oscillator.hpp"

namespace hillpt {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HelpRequest {
    std::string text;
};

struct RunConfig {
    enum class Mode { Spectrum, Sweep, Wavefunction, Asymptotics, Verify };
    enum class Format { Table, Csv, Json };

    Mode mode = Mode::Spectrum;
    OscillatorParams params{1.0, 1.0, 1.0, 2.0};
    int n = 35;
    std::vector<int> n_list;
    int levels = 5;
    int level = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    int points = 0;
    Format format = Format::Table;
    std::string output_path;
    std::string dump_matrix_path;
};

// Args exclude the program name.  Throws UsageError on bad input (all
// violations joined into one message) and HelpRequest for --help.
RunConfig parse_args(std::vector<std::string> args);

// Writes exactly one artifact (to --output or out); warnings go to diag.
// Returns the process exit code: 0 success, 1 numerical failure.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

int cli_main(int argc, char** argv);

}  // namespace hillpt
