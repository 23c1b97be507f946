#include "doho/core/distribution_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace doho {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

FiniteDistribution read_distribution(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    bool have_header = false;
    std::vector<Atom> atoms;
    double total = 0.0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        if (a.empty() || b.empty() || (fields >> extra)) {
            throw DistributionFormatError("line " + std::to_string(line_no) +
                                          ": expected two fields");
        }
        if (!have_header) {
            if (a != "n") {
                throw DistributionFormatError("line " + std::to_string(line_no) +
                                              ": expected header 'n <int>'");
            }
            auto [ptr, ec] = std::from_chars(b.data(), b.data() + b.size(), n);
            if (ec != std::errc{} || ptr != b.data() + b.size() || n == 0) {
                throw DistributionFormatError("bad object size '" + b + "'");
            }
            have_header = true;
            continue;
        }
        BitString s;
        try {
            s = BitString::parse(a);
        } catch (const std::invalid_argument& e) {
            throw DistributionFormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (s.size() != n) {
            throw DistributionFormatError("line " + std::to_string(line_no) + ": string length " +
                                          std::to_string(s.size()) + " differs from n=" +
                                          std::to_string(n));
        }
        double w = 0.0;
        try {
            std::size_t used = 0;
            w = std::stod(b, &used);
            if (used != b.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw DistributionFormatError("line " + std::to_string(line_no) + ": bad weight '" +
                                          b + "'");
        }
        if (!(w > 0.0) || w > 1.0) {
            throw DistributionFormatError("line " + std::to_string(line_no) +
                                          ": weight outside (0,1]");
        }
        total += w;
        atoms.push_back({std::move(s), w});
    }
    if (!have_header) throw DistributionFormatError("missing header 'n <int>'");
    if (atoms.empty()) throw DistributionFormatError("distribution has no atoms");
    if (std::fabs(total - 1.0) > kFileWeightTolerance) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", total);
        throw DistributionFormatError(std::string("weights sum to ") + buf + ", not 1");
    }
    try {
        // Duplicates are an error in files, so check before merging.
        std::vector<BitString> strings;
        for (const auto& a : atoms) strings.push_back(a.string);
        std::sort(strings.begin(), strings.end());
        if (std::adjacent_find(strings.begin(), strings.end()) != strings.end()) {
            throw DistributionFormatError("duplicate atom string");
        }
        return FiniteDistribution::from_weighted(n, std::move(atoms), kFileWeightTolerance);
    } catch (const std::invalid_argument& e) {
        throw DistributionFormatError(e.what());
    }
}

FiniteDistribution load_distribution(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_distribution(in);
}

void write_distribution(std::ostream& out, const FiniteDistribution& dist) {
    out << "n " << dist.n() << '\n';
    char buf[40];
    for (const auto& a : dist.atoms()) {
        std::snprintf(buf, sizeof buf, "%.17g", a.weight);
        out << a.string.to_string() << ' ' << buf << '\n';
    }
}

void save_distribution(const std::filesystem::path& path, const FiniteDistribution& dist) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_distribution(out, dist);
}

}  // namespace doho
