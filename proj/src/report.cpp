#include "mocstab/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mocstab {

std::string format_double(double v) {
    // shortest representation that parses back to the same double
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep,
                     const std::string& model_id, const std::string& solution_id) {
    os << "# scheme=" << scheme_id(sweep.scheme) << " h=" << format_double(sweep.h)
       << " model=" << model_id << " solution=" << solution_id << "\n";
    os << "z,max_abs_lambda,gamma\n";
    for (std::size_t i = 0; i < sweep.z.size(); ++i)
        os << format_double(sweep.z[i]) << ',' << format_double(sweep.max_abs[i]) << ','
           << format_double(sweep.gamma[i]) << "\n";
}

SweepCsv read_sweep_csv(std::istream& is) {
    SweepCsv out{.header = "", .sweep = {}};
    std::string line;
    if (!std::getline(is, line) || line.empty() || line[0] != '#')
        throw std::runtime_error("read_sweep_csv: missing metadata header");
    out.header = line;

    const auto field = [&](const std::string& key) -> std::string {
        const std::string tag = key + "=";
        const auto pos = line.find(tag);
        if (pos == std::string::npos)
            throw std::runtime_error("read_sweep_csv: header lacks " + key);
        const auto end = line.find(' ', pos + tag.size());
        return line.substr(pos + tag.size(), end == std::string::npos
                                                 ? std::string::npos
                                                 : end - pos - tag.size());
    };
    out.sweep.scheme = scheme_from_id(field("scheme"));
    out.sweep.h = std::stod(field("h"));

    if (!std::getline(is, line) || line != "z,max_abs_lambda,gamma")
        throw std::runtime_error("read_sweep_csv: missing column header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        double z, ma, g;
        if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &z, &ma, &g) != 3)
            throw std::runtime_error("read_sweep_csv: bad row: " + line);
        out.sweep.z.push_back(z);
        out.sweep.max_abs.push_back(ma);
        out.sweep.gamma.push_back(g);
    }
    return out;
}

void write_sweep_csv(std::ostream& os, const SweepCsv& csv) {
    os << csv.header << "\n";
    os << "z,max_abs_lambda,gamma\n";
    for (std::size_t i = 0; i < csv.sweep.z.size(); ++i)
        os << format_double(csv.sweep.z[i]) << ',' << format_double(csv.sweep.max_abs[i])
           << ',' << format_double(csv.sweep.gamma[i]) << "\n";
}

void write_series_csv(std::ostream& os, const SimulationReport& report) {
    os << "t,total_error,conservation_plus,conservation_minus\n";
    for (std::size_t i = 0; i < report.t.size(); ++i)
        os << format_double(report.t[i]) << ',' << format_double(report.total_error[i])
           << ',' << format_double(report.conservation_plus[i]) << ','
           << format_double(report.conservation_minus[i]) << "\n";
}

void write_spectrum_csv(std::ostream& os, const ErrorSpectrum& spectrum) {
    os << "z,log10_err\n";
    for (std::size_t i = 0; i < spectrum.z.size(); ++i)
        os << format_double(spectrum.z[i]) << ','
           << format_double(spectrum.log10_magnitude[i]) << "\n";
}

std::string report_to_json(const SimulationReport& r) {
    nlohmann::json j;
    j["version"] = 1;
    j["model"] = r.model_id;
    j["solution"] = r.solution_id;
    j["scheme"] = scheme_id(r.scheme);
    j["h"] = r.h;
    j["length"] = r.length;
    j["node_count"] = r.node_count;
    j["seed"] = r.seed;
    j["noise_amplitude"] = r.noise_amplitude;
    j["t_end"] = r.t_end;
    j["final_time"] = r.final_time;
    j["samples"] = r.t.size();
    if (r.blowup_time) j["blowup_time"] = *r.blowup_time;
    if (r.destruction_time) j["destruction_time"] = *r.destruction_time;
    if (r.growth) {
        j["growth_rate"] = {{"gamma", r.growth->gamma},
                            {"t1", r.growth->t1},
                            {"t2", r.growth->t2},
                            {"fit_residual", r.growth->fit_residual}};
    }
    return j.dump(2);
}

}  // namespace mocstab
