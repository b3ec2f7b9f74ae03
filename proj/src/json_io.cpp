#include "thetaloc/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

namespace thetaloc {

namespace {

const Json& require(const Json& j, const char* field, const char* context) {
    const auto it = j.find(field);
    if (it == j.end())
        throw std::invalid_argument(std::string(context) + ": missing field '" +
                                    field + "'");
    return *it;
}

std::vector<std::uint8_t> bits_from_json(const Json& j, const char* field,
                                         const char* context) {
    const Json& arr = require(j, field, context);
    if (!arr.is_array())
        throw std::invalid_argument(std::string(context) + ": field '" + field +
                                    "' must be an array of bits");
    std::vector<std::uint8_t> bits;
    for (const Json& v : arr) {
        if (!v.is_number_integer() || (v != 0 && v != 1))
            throw std::invalid_argument(std::string(context) + ": field '" +
                                        field + "' must contain only 0 or 1");
        bits.push_back(v.get<std::uint8_t>());
    }
    return bits;
}

Eigen::MatrixXd real_matrix_from_json(const Json& j, const char* field,
                                      int genus, const char* context) {
    const Json& rows = require(j, field, context);
    if (!rows.is_array() || static_cast<int>(rows.size()) != genus)
        throw std::invalid_argument(std::string(context) + ": field '" + field +
                                    "' must be a " + std::to_string(genus) +
                                    "-row matrix");
    Eigen::MatrixXd m(genus, genus);
    for (int r = 0; r < genus; ++r) {
        const Json& row = rows[r];
        if (!row.is_array() || static_cast<int>(row.size()) != genus)
            throw std::invalid_argument(std::string(context) + ": field '" +
                                        field + "' row " + std::to_string(r) +
                                        " must have " + std::to_string(genus) +
                                        " entries");
        for (int c = 0; c < genus; ++c) {
            if (!row[c].is_number())
                throw std::invalid_argument(std::string(context) + ": field '" +
                                            field + "' entry (" +
                                            std::to_string(r) + "," +
                                            std::to_string(c) +
                                            ") must be a number");
            m(r, c) = row[c].get<double>();
        }
    }
    return m;
}

Json real_matrix_to_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json to_json(const Characteristic& delta) {
    Json j;
    j["genus"] = delta.genus();
    j["top"] = delta.top_bits();
    j["bottom"] = delta.bottom_bits();
    return j;
}

Characteristic characteristic_from_json(const Json& j) {
    constexpr const char* ctx = "characteristic";
    const Json& genus = require(j, "genus", ctx);
    if (!genus.is_number_integer())
        throw std::invalid_argument("characteristic: field 'genus' must be an "
                                    "integer");
    const auto top = bits_from_json(j, "top", ctx);
    const auto bottom = bits_from_json(j, "bottom", ctx);
    if (static_cast<int>(top.size()) != genus.get<int>() ||
        static_cast<int>(bottom.size()) != genus.get<int>())
        throw std::invalid_argument(
            "characteristic: bit arrays must have length 'genus'");
    return Characteristic(top, bottom);
}

Json to_json(const PeriodMatrix& omega) {
    Json j;
    j["genus"] = omega.genus();
    j["re"] = real_matrix_to_json(omega.real_part());
    j["im"] = real_matrix_to_json(omega.imag_part());
    return j;
}

PeriodMatrix period_matrix_from_json(const Json& j) {
    constexpr const char* ctx = "period matrix";
    const Json& genus_j = require(j, "genus", ctx);
    if (!genus_j.is_number_integer() || genus_j.get<int>() < 1)
        throw std::invalid_argument(
            "period matrix: field 'genus' must be a positive integer");
    const int genus = genus_j.get<int>();
    const Eigen::MatrixXd re = real_matrix_from_json(j, "re", genus, ctx);
    const Eigen::MatrixXd im = real_matrix_from_json(j, "im", genus, ctx);
    Eigen::MatrixXcd omega(genus, genus);
    omega.real() = re;
    omega.imag() = im;
    return PeriodMatrix(omega);  // membership invariants enforced here
}

Json to_json_vector(const Eigen::VectorXcd& z) {
    Json j;
    Json re = Json::array(), im = Json::array();
    for (int i = 0; i < z.size(); ++i) {
        re.push_back(z[i].real());
        im.push_back(z[i].imag());
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

Eigen::VectorXcd vector_from_json(const Json& j) {
    constexpr const char* ctx = "vector";
    const Json& re = require(j, "re", ctx);
    const Json& im = require(j, "im", ctx);
    if (!re.is_array() || !im.is_array() || re.size() != im.size())
        throw std::invalid_argument(
            "vector: fields 're' and 'im' must be arrays of equal length");
    Eigen::VectorXcd z(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
        if (!re[i].is_number() || !im[i].is_number())
            throw std::invalid_argument("vector: entry " + std::to_string(i) +
                                        " must be numeric in 're' and 'im'");
        z[static_cast<int>(i)] = {re[i].get<double>(), im[i].get<double>()};
    }
    return z;
}

Json to_json(const SymplecticMatrix& m) {
    Json j;
    j["genus"] = m.genus();
    Json rows = Json::array();
    for (int r = 0; r < 2 * m.genus(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < 2 * m.genus(); ++c)
            row.push_back(m.matrix()(r, c));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

SymplecticMatrix symplectic_from_json(const Json& j) {
    constexpr const char* ctx = "symplectic matrix";
    const Json& genus_j = require(j, "genus", ctx);
    if (!genus_j.is_number_integer() || genus_j.get<int>() < 1)
        throw std::invalid_argument(
            "symplectic matrix: field 'genus' must be a positive integer");
    const int n = 2 * genus_j.get<int>();
    const Json& rows = require(j, "entries", ctx);
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument(
            "symplectic matrix: field 'entries' must have 2g rows");
    IntMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
        const Json& row = rows[r];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument(
                "symplectic matrix: field 'entries' row " + std::to_string(r) +
                " must have 2g entries");
        for (int c = 0; c < n; ++c) {
            if (!row[c].is_number_integer())
                throw std::invalid_argument(
                    "symplectic matrix: field 'entries' must be integers");
            m(r, c) = row[c].get<std::int64_t>();
        }
    }
    return SymplecticMatrix(m);  // MᵀJM = J enforced here
}

Json to_json(const Grouping& grouping) {
    Json j;
    j["blocks"] = grouping.blocks();
    return j;
}

Grouping grouping_from_json(const Json& j) {
    const Json& blocks = require(j, "blocks", "grouping");
    if (!blocks.is_array())
        throw std::invalid_argument("grouping: field 'blocks' must be an array");
    std::vector<std::vector<int>> parsed;
    for (const Json& block : blocks) {
        if (!block.is_array())
            throw std::invalid_argument(
                "grouping: field 'blocks' must contain arrays of coordinates");
        std::vector<int> b;
        for (const Json& v : block) {
            if (!v.is_number_integer())
                throw std::invalid_argument(
                    "grouping: coordinates must be integers");
            b.push_back(v.get<int>());
        }
        parsed.push_back(std::move(b));
    }
    return Grouping(std::move(parsed));
}

Json to_json(const NerveInput& input) {
    Json j;
    j["ambient_dim"] = input.ambient_dim;
    j["levels"] = input.level_cell_dims;
    return j;
}

NerveInput nerve_input_from_json(const Json& j) {
    constexpr const char* ctx = "nerve input";
    const Json& dim = require(j, "ambient_dim", ctx);
    if (!dim.is_number_integer())
        throw std::invalid_argument(
            "nerve input: field 'ambient_dim' must be an integer");
    const Json& levels = require(j, "levels", ctx);
    if (!levels.is_array())
        throw std::invalid_argument(
            "nerve input: field 'levels' must be an array of dimension lists");
    NerveInput input;
    input.ambient_dim = dim.get<int>();
    for (const Json& level : levels) {
        if (!level.is_array())
            throw std::invalid_argument(
                "nerve input: each level must be an array of cell dimensions");
        std::vector<int> dims;
        for (const Json& v : level) {
            if (!v.is_number_integer())
                throw std::invalid_argument(
                    "nerve input: cell dimensions must be integers");
            dims.push_back(v.get<int>());
        }
        input.level_cell_dims.push_back(std::move(dims));
    }
    return input;
}

std::string to_string(Classification cls) {
    switch (cls) {
        case Classification::Zero: return "zero";
        case Classification::Nonzero: return "nonzero";
        case Classification::Indeterminate: return "indeterminate";
    }
    throw std::invalid_argument("unknown classification");
}

Classification classification_from_string(const std::string& s) {
    if (s == "zero") return Classification::Zero;
    if (s == "nonzero") return Classification::Nonzero;
    if (s == "indeterminate") return Classification::Indeterminate;
    throw std::invalid_argument("unknown classification '" + s + "'");
}

Json to_json(const StratumPoint& point) {
    Json j;
    j["kind"] = to_string(point.kind);
    j["grouping"] = to_json(point.grouping);
    j["omega"] = to_json(point.data);
    return j;
}

StratumPoint stratum_point_from_json(const Json& j) {
    constexpr const char* ctx = "stratum point";
    const Json& kind = require(j, "kind", ctx);
    if (!kind.is_string())
        throw std::invalid_argument("stratum point: field 'kind' must be a string");
    return StratumPoint{stratum_kind_from_string(kind.get<std::string>()),
                        grouping_from_json(require(j, "grouping", ctx)),
                        period_matrix_from_json(require(j, "omega", ctx))};
}

Json to_json(const IncidenceReport& report) {
    Json j;
    j["point"] = to_json(report.point);
    Json vanishing = Json::array();
    for (const Characteristic& d : report.vanishing_even)
        vanishing.push_back(to_json(d));
    j["vanishing_even"] = std::move(vanishing);
    Json readings = Json::array();
    for (const CharacteristicReading& r : report.readings) {
        Json rj;
        rj["delta"] = to_json(r.delta);
        rj["magnitude"] = r.magnitude;
        rj["classification"] = to_string(r.cls);
        readings.push_back(std::move(rj));
    }
    j["readings"] = std::move(readings);
    Json indet = Json::array();
    for (const Characteristic& d : report.indeterminate)
        indet.push_back(to_json(d));
    j["indeterminate"] = std::move(indet);
    return j;
}

IncidenceReport incidence_report_from_json(const Json& j) {
    constexpr const char* ctx = "incidence report";
    IncidenceReport report{
        stratum_point_from_json(require(j, "point", ctx)), {}, {}, {}};
    for (const Json& d : require(j, "vanishing_even", ctx))
        report.vanishing_even.push_back(characteristic_from_json(d));
    for (const Json& rj : require(j, "readings", ctx)) {
        CharacteristicReading r{
            characteristic_from_json(require(rj, "delta", "reading")),
            require(rj, "magnitude", "reading").get<double>(),
            classification_from_string(
                require(rj, "classification", "reading").get<std::string>())};
        report.readings.push_back(std::move(r));
    }
    for (const Json& d : require(j, "indeterminate", ctx))
        report.indeterminate.push_back(characteristic_from_json(d));
    return report;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " +
                                    e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

bool io_roundtrip(const std::string& path) {
    const Json j = load_json_file(path);
    Json first, second;
    if (j.contains("point")) {
        const IncidenceReport r = incidence_report_from_json(j);
        first = to_json(r);
        second = to_json(incidence_report_from_json(first));
    } else if (j.contains("kind")) {
        const StratumPoint p = stratum_point_from_json(j);
        first = to_json(p);
        second = to_json(stratum_point_from_json(first));
    } else if (j.contains("entries")) {
        const SymplecticMatrix m = symplectic_from_json(j);
        first = to_json(m);
        second = to_json(symplectic_from_json(first));
    } else if (j.contains("top")) {
        const Characteristic d = characteristic_from_json(j);
        first = to_json(d);
        second = to_json(characteristic_from_json(first));
    } else if (j.contains("blocks")) {
        const Grouping grp = grouping_from_json(j);
        first = to_json(grp);
        second = to_json(grouping_from_json(first));
    } else if (j.contains("ambient_dim")) {
        const NerveInput n = nerve_input_from_json(j);
        first = to_json(n);
        second = to_json(nerve_input_from_json(first));
    } else if (j.contains("genus")) {
        const PeriodMatrix omega = period_matrix_from_json(j);
        first = to_json(omega);
        second = to_json(period_matrix_from_json(first));
    } else if (j.contains("re")) {
        const Eigen::VectorXcd z = vector_from_json(j);
        first = to_json_vector(z);
        second = to_json_vector(vector_from_json(first));
    } else {
        throw std::invalid_argument(
            "'" + path + "' does not match any documented schema");
    }
    return first == second;
}

}  // namespace thetaloc
