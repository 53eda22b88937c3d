#include "ltc/io.hpp"

#include <fstream>

namespace ltc {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::InvalidDocument, msg); }

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) invalid(where + " must be an object");
    auto it = j.find(key);
    if (it == j.end()) invalid(where + " lacks \"" + key + "\"");
    return *it;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) invalid(where + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<Rational> flat_from_json(const Json& j, std::size_t expected, const std::string& where) {
    Vector v = vector_from_json(j, where);
    if (v.size() != expected)
        invalid(where + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(expected));
    return v;
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    if (!j.is_string()) invalid(where + ": expected a rational string such as \"-3/4\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        invalid(where + ": " + e.what());
    }
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rational_to_json(q));
    return out;
}

Vector vector_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) invalid(where + " must be an array");
    Vector v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Json to_json(const StructureConstants& alg) {
    const std::size_t n = alg.dim();
    Json table = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(vector_to_json(alg.basis_product(i, j)));
        table.push_back(std::move(row));
    }
    return Json{{"dim", n}, {"labels", alg.labels()}, {"table", std::move(table)}};
}

StructureConstants structure_constants_from_json(const Json& j) {
    const std::size_t n = count_from_json(field(j, "dim", "algebra"), "algebra.dim");
    if (n == 0) invalid("algebra.dim must be positive");
    const Json& table = field(j, "table", "algebra");
    if (!table.is_array() || table.size() != n) invalid("algebra.table must have dim rows");
    std::vector<Rational> flat;
    flat.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!table[i].is_array() || table[i].size() != n) invalid("algebra.table[" + std::to_string(i) + "] must have dim entries");
        for (std::size_t jj = 0; jj < n; ++jj) {
            std::string where = "algebra.table[" + std::to_string(i) + "][" + std::to_string(jj) + "]";
            Vector v = flat_from_json(table[i][jj], n, where);
            flat.insert(flat.end(), v.begin(), v.end());
        }
    }
    std::vector<std::string> labels;
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_array() || it->size() != n) invalid("algebra.labels must have dim strings");
        for (const auto& l : *it) {
            if (!l.is_string()) invalid("algebra.labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return StructureConstants(n, flat, labels);
}

Json to_json(const Bimodule& m) {
    return Json{{"dim", m.dim}, {"left", vector_to_json(m.left)}, {"right", vector_to_json(m.right)}};
}

Bimodule bimodule_from_json(const Json& j, const std::string& where) {
    Bimodule m;
    m.dim = count_from_json(field(j, "dim", where), where + ".dim");
    m.left = vector_from_json(field(j, "left", where), where + ".left");
    m.right = vector_from_json(field(j, "right", where), where + ".right");
    return m;
}

Json to_json(const MoritaContext& ctx) {
    return Json{{"A", to_json(ctx.A)}, {"B", to_json(ctx.B)},       {"M", to_json(ctx.M)},
                {"N", to_json(ctx.N)}, {"zeta", vector_to_json(ctx.zeta)}, {"psi", vector_to_json(ctx.psi)}};
}

MoritaContext morita_context_from_json(const Json& j) {
    StructureConstants a = structure_constants_from_json(field(j, "A", "context"));
    StructureConstants b = structure_constants_from_json(field(j, "B", "context"));
    Bimodule m = bimodule_from_json(field(j, "M", "context"), "context.M");
    Bimodule n = bimodule_from_json(field(j, "N", "context"), "context.N");
    Vector zeta = flat_from_json(field(j, "zeta", "context"), m.dim * n.dim * a.dim(), "context.zeta");
    Vector psi = flat_from_json(field(j, "psi", "context"), n.dim * m.dim * b.dim(), "context.psi");
    return MoritaContext{std::move(a), std::move(b), std::move(m), std::move(n), std::move(zeta), std::move(psi)};
}

Json operator_to_json(const StructureConstants& alg, const LinearOperator& op) {
    Json cols = Json::array();
    for (std::size_t c = 0; c < op.cols(); ++c) cols.push_back(vector_to_json(op.column(c)));
    return Json{{"algebra_hash", alg.content_hash()}, {"matrix", std::move(cols)}};
}

LinearOperator operator_from_json(const StructureConstants& alg, const Json& j) {
    const Json& hash = field(j, "algebra_hash", "operator");
    if (!hash.is_string()) invalid("operator.algebra_hash must be a string");
    if (hash.get<std::string>() != alg.content_hash())
        throw Error(ErrorKind::HashMismatch, "operator was saved for algebra " + hash.get<std::string>() +
                                                 ", not " + alg.content_hash());
    const Json& cols = field(j, "matrix", "operator");
    const std::size_t n = alg.dim();
    if (!cols.is_array() || cols.size() != n) invalid("operator.matrix must list dim columns");
    LinearOperator op(n, n);
    for (std::size_t c = 0; c < n; ++c)
        op.set_column(c, flat_from_json(cols[c], n, "operator.matrix[" + std::to_string(c) + "]"));
    return op;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) invalid("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        invalid(path.string() + ": " + e.what());
    }
}

}  // namespace ltc
