#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qnogo/channels.hpp"
#include "qnogo/errors.hpp"
#include "qnogo/matrix.hpp"
#include "qnogo/states.hpp"

namespace qnogo {

/// {"rows": r, "cols": c, "entries": [[re, im], ...]} row-major.
inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const cplx& z : m.entries())
        entries.push_back({z.real(), z.imag()});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON needs rows, cols, entries");
    const nlohmann::json& jr = j.at("rows");
    const nlohmann::json& jc = j.at("cols");
    const nlohmann::json& je = j.at("entries");
    if (!jr.is_number_integer() || !jc.is_number_integer() || !je.is_array())
        throw ParseError("matrix JSON fields have wrong types");
    const long long rows = jr.get<long long>();
    const long long cols = jc.get<long long>();
    if (rows < 1 || cols < 1)
        throw ParseError("matrix dimensions must be positive");
    if (je.size() != static_cast<std::size_t>(rows * cols))
        throw ParseError("matrix JSON entry count does not match rows*cols");
    std::vector<cplx> entries;
    entries.reserve(je.size());
    for (const nlohmann::json& pair : je) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ParseError("matrix entry must be a [re, im] number pair");
        entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    try {
        return ComplexMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                             std::move(entries));
    } catch (const Error& e) {
        throw ParseError(std::string("matrix JSON rejected: ") + e.what());
    }
}

namespace detail {

inline std::vector<std::size_t> dims_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("dims must be a nonempty array");
    std::vector<std::size_t> dims;
    for (const nlohmann::json& d : j) {
        if (!d.is_number_integer() || d.get<long long>() < 1)
            throw ParseError("dims entries must be positive integers");
        dims.push_back(d.get<std::size_t>());
    }
    return dims;
}

} // namespace detail

/// The matrix format restricted to a column vector, plus a "dims" field.
inline nlohmann::json state_to_json(const PureState& psi) {
    nlohmann::json j = matrix_to_json(ComplexMatrix::column(psi.amplitudes()));
    j["dims"] = psi.dims();
    return j;
}

inline PureState state_from_json(const nlohmann::json& j) {
    const ComplexMatrix column = matrix_from_json(j);
    if (column.cols() != 1)
        throw ParseError("state JSON must be a single-column matrix");
    if (!j.contains("dims"))
        throw ParseError("state JSON needs a dims field");
    std::vector<std::size_t> dims = detail::dims_from_json(j.at("dims"));
    try {
        return PureState(std::vector<cplx>(column.entries().begin(), column.entries().end()),
                         std::move(dims));
    } catch (const Error& e) {
        throw ParseError(std::string("state JSON rejected: ") + e.what());
    }
}

/// {"kraus": [matrix, ...], "in_dims": [...], "out_dims": [...]}.
inline nlohmann::json channel_to_json(const QuantumChannel& channel) {
    nlohmann::json kraus = nlohmann::json::array();
    for (const ComplexMatrix& a : channel.kraus())
        kraus.push_back(matrix_to_json(a));
    return {{"kraus", std::move(kraus)},
            {"in_dims", channel.in_dims()},
            {"out_dims", channel.out_dims()}};
}

/// Loads and re-validates: a channel that is not trace preserving within
/// 1e-9 is rejected even if the file parses.
inline QuantumChannel channel_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kraus") || !j.contains("in_dims") ||
        !j.contains("out_dims"))
        throw ParseError("channel JSON needs kraus, in_dims, out_dims");
    if (!j.at("kraus").is_array() || j.at("kraus").empty())
        throw ParseError("channel JSON needs a nonempty kraus array");
    std::vector<ComplexMatrix> kraus;
    for (const nlohmann::json& m : j.at("kraus"))
        kraus.push_back(matrix_from_json(m));
    QuantumChannel channel = [&] {
        try {
            return QuantumChannel(std::move(kraus), detail::dims_from_json(j.at("in_dims")),
                                  detail::dims_from_json(j.at("out_dims")));
        } catch (const Error& e) {
            throw ParseError(std::string("channel JSON rejected: ") + e.what());
        }
    }();
    const CptpReport report = validate_cptp(channel);
    if (!report.accepted)
        throw InvalidChannel("loaded channel is not trace preserving within 1e-9");
    return channel;
}

} // namespace qnogo
