#include "tautring/report.hpp"

#include <sstream>

#include <json.hpp>

namespace tautring {

using nlohmann::json;

std::string matrix_csv(const PairingMatrix& m) {
    LabelSet labels(m.n);
    std::ostringstream os;
    os << "label";
    for (int j = 0; j < labels.size(); ++j) os << ",\"" << labels.label(j).str() << "\"";
    os << "\n";
    for (int i = 0; i < labels.size(); ++i) {
        os << "\"" << labels.label(i).str() << "\"";
        for (int j = 0; j < labels.size(); ++j) os << "," << m.entries.at(i, j).str();
        os << "\n";
    }
    return os.str();
}

std::string matrix_json(const PairingMatrix& m) {
    LabelSet labels(m.n);
    json j;
    j["n"] = m.n;
    j["labels"] = json::array();
    for (int i = 0; i < labels.size(); ++i) j["labels"].push_back(labels.label(i).str());
    j["entries"] = json::array();
    for (int i = 0; i < labels.size(); ++i) {
        json row = json::array();
        for (int c = 0; c < labels.size(); ++c) row.push_back(m.entries.at(i, c).str());
        j["entries"].push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string report_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back({{"check", c.check},
                       {"params", c.params},
                       {"verdict", c.ok ? "OK" : "FAIL"},
                       {"details", c.details}});
    return arr.dump(2) + "\n";
}

std::string report_csv(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    os << "check,params,verdict,details\n";
    for (const auto& c : checks)
        os << "\"" << c.check << "\",\"" << c.params << "\"," << (c.ok ? "OK" : "FAIL") << ",\""
           << c.details << "\"\n";
    return os.str();
}

std::string report_text(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.ok ? "OK   " : "FAIL ") << c.check << " [" << c.params << "] " << c.details << "\n";
    return os.str();
}

std::string ranks_csv(int g, int n_lo, int n_hi) {
    std::ostringstream os;
    os << "g,n,d,rank\n";
    for (int n = n_lo; n <= n_hi; ++n) {
        auto r = rank_table(g, n);
        for (std::size_t d = 0; d < r.size(); ++d)
            os << g << "," << n << "," << d << "," << r[d] << "\n";
    }
    return os.str();
}

std::string ranks_json(int g, int n_lo, int n_hi) {
    json arr = json::array();
    for (int n = n_lo; n <= n_hi; ++n) {
        auto r = rank_table(g, n);
        json row;
        row["g"] = g;
        row["n"] = n;
        row["ranks"] = r;
        arr.push_back(row);
    }
    return arr.dump(2) + "\n";
}

}  // namespace tautring
