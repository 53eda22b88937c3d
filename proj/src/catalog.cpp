#include "ltc/catalog.hpp"

#include <charconv>
#include <filesystem>
#include <functional>
#include <regex>

#include "ltc/io.hpp"

namespace ltc {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::InvalidDocument, msg); }

std::string unit_label(std::size_t i, std::size_t j, std::size_t n) {
    if (n < 10) return "e" + std::to_string(i + 1) + std::to_string(j + 1);
    return "e(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Matrix units admitted by `allowed`, grouped by the corner they sit in
// after splitting rows and columns at k.
Gma matrix_units(std::size_t n, std::size_t k, const std::function<bool(std::size_t, std::size_t)>& allowed) {
    if (n < 2 || k < 1 || k >= n) invalid("matrix algebras need n >= 2 and a split 1 <= k < n");
    std::vector<std::pair<std::size_t, std::size_t>> units;
    std::array<std::size_t, 4> dims{};
    auto in_block = [&](int b, std::size_t i, std::size_t j) {
        bool top = i < k, left = j < k;
        return (b == 0 && top && left) || (b == 1 && top && !left) || (b == 2 && !top && left) ||
               (b == 3 && !top && !left);
    };
    for (int b = 0; b < 4; ++b)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (allowed(i, j) && in_block(b, i, j)) {
                    units.emplace_back(i, j);
                    ++dims[b];
                }
    const std::size_t d = units.size();
    std::vector<std::size_t> index(n * n, d);
    for (std::size_t t = 0; t < d; ++t) index[units[t].first * n + units[t].second] = t;
    std::vector<Rational> table(d * d * d);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < d; ++a) {
        labels.push_back(unit_label(units[a].first, units[a].second, n));
        for (std::size_t b = 0; b < d; ++b)
            if (units[a].second == units[b].first) {
                std::size_t t = index[units[a].first * n + units[b].second];
                if (t == d) invalid("matrix-unit pattern is not closed under products");
                table[(a * d + b) * d + t] = 1;
            }
    }
    return Gma(StructureConstants(d, table, labels), dims);
}

StructureConstants pattern_algebra(const std::vector<std::vector<bool>>& rel) {
    const std::size_t k = rel.size();
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (rel[i][j]) units.emplace_back(i, j);
    const std::size_t d = units.size();
    std::vector<Rational> table(d * d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            if (units[a].second == units[b].first)
                for (std::size_t t = 0; t < d; ++t)
                    if (units[t] == std::make_pair(units[a].first, units[b].second)) table[(a * d + b) * d + t] = 1;
    std::vector<std::string> labels;
    for (auto [i, j] : units) labels.push_back(unit_label(i, j, k));
    return StructureConstants(d, table, labels);
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t d) {
    for (;;) {
        Matrix p(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) p(r, c) = static_cast<long>(rng() % 5) - 2;
        if (rank(p) == d) return p;
    }
}

std::size_t parse_count(const std::string& s, const std::string& what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) invalid(what + ": expected a positive integer, got \"" + s + "\"");
    return v;
}

std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto comma = s.find(',', start);
        std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        part.erase(0, part.find_first_not_of(" \t"));
        part.erase(part.find_last_not_of(" \t") + 1);
        out.push_back(part);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

CatalogEntry from_gma(std::string name, std::string note, Gma g) {
    StructureConstants alg = g.algebra();
    return CatalogEntry{std::move(name), std::move(note), std::move(alg), std::move(g), std::nullopt};
}

CatalogEntry matrix_entry(const std::string& family, const std::vector<std::string>& args) {
    if (args.empty() || args.size() > 2) invalid(family + " takes n and an optional split k");
    std::size_t n = parse_count(args[0], family);
    std::size_t k = args.size() == 2 ? parse_count(args[1], family) : 1;
    std::string name = family + "(" + args[0] + (args.size() == 2 ? "," + args[1] : "") + ")";
    if (n == 0) invalid(family + " needs n >= 1");
    if (n == 1) return CatalogEntry{name, "the field of rationals; no block structure", rationals(), std::nullopt, std::nullopt};
    if (family == "upper_triangular")
        return from_gma(name, "upper triangular matrices, a triangular algebra", upper_triangular(n, k));
    return from_gma(name, "full matrix algebra", full_matrix(n, k));
}

}  // namespace

Gma upper_triangular(std::size_t n, std::size_t k) {
    return matrix_units(n, k, [](std::size_t i, std::size_t j) { return i <= j; });
}

Gma full_matrix(std::size_t n, std::size_t k) {
    return matrix_units(n, k, [](std::size_t, std::size_t) { return true; });
}

Gma tri(const StructureConstants& a, const Bimodule& m, const StructureConstants& b) {
    Bimodule zero{0, {}, {}};
    return assemble(MoritaContext{a, b, m, zero, {}, {}});
}

StructureConstants rationals() { return StructureConstants(1, {Rational(1)}, {"1"}); }

StructureConstants dual_numbers() {
    std::vector<Rational> t(8);
    t[(0 * 2 + 0) * 2 + 0] = 1;
    t[(0 * 2 + 1) * 2 + 1] = 1;
    t[(1 * 2 + 0) * 2 + 1] = 1;
    return StructureConstants(2, t, {"1", "x"});
}

Bimodule regular_bimodule(const StructureConstants& alg) {
    std::vector<Rational> t = alg.flat_table();
    return Bimodule{alg.dim(), t, t};
}

Example12 example_1_2() {
    std::vector<Rational> t(27);
    t[(0 * 3 + 1) * 3 + 2] = 1;  // u1 u2 = u3
    StructureConstants a(3, t, {"u1", "u2", "u3"});
    Example12 ex{m2_of(a), LinearOperator(12, 12), {}, {}, {}};
    const std::size_t oa = ex.u.block_offset(Block::A), ob = ex.u.block_offset(Block::B);
    for (std::size_t i = 0; i < 3; ++i) {
        ex.phi(ob + i, oa + i) = 1;
        ex.phi(oa + i, ob + i) = 1;
    }
    auto corner = [](long x1, long x2, long x3) { return Vector{Rational(x1), Rational(x2), Rational(x3)}; };
    ex.a0 = ex.u.embed(Block::A, corner(1, 1, 0)) + ex.u.embed(Block::B, corner(2, 1, 0));
    ex.b0 = ex.u.embed(Block::A, corner(1, 1, 0)) + ex.u.embed(Block::B, corner(1, 2, 0));
    ex.chi_a0 = ex.phi * ex.a0;
    return ex;
}

StructureConstants change_basis(const StructureConstants& alg, const Matrix& p) {
    const std::size_t n = alg.dim();
    if (p.rows() != n || p.cols() != n) throw Error(ErrorKind::DimensionMismatch, "basis change has the wrong size");
    const Matrix inv = inverse(p);
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(p.column(i));
    std::vector<Rational> t(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector c = inv * alg.multiply(cols[i], cols[j]);
            for (std::size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = c[k];
        }
    return StructureConstants(n, t);
}

Gma random_morita_context(std::mt19937_64& rng) {
    for (;;) {
        const std::size_t k = 2 + rng() % 2;
        std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) rel[i][j] = i == j || rng() % 2 == 0;
        for (std::size_t m = 0; m < k; ++m)
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (rel[i][m] && rel[m][j]) rel[i][j] = true;

        StructureConstants coeff = rationals();
        Vector coeff_one{Rational(1)};
        switch (rng() % 3) {
            case 1:
                coeff = dual_numbers();
                coeff_one = {Rational(1), Rational(0)};
                break;
            case 2:
                coeff = direct_sum(rationals(), rationals());
                coeff_one = {Rational(1), Rational(1)};
                break;
            default:
                break;
        }
        const StructureConstants alg = tensor_product(pattern_algebra(rel), coeff);

        const std::size_t mask = 1 + rng() % ((std::size_t{1} << k) - 2);
        Vector e = zero_vector(alg.dim());
        std::size_t unit_index = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (!rel[i][j]) continue;
                if (i == j && (mask >> i & 1))
                    for (std::size_t r = 0; r < coeff.dim(); ++r) e[unit_index * coeff.dim() + r] = coeff_one[r];
                ++unit_index;
            }

        PeirceDecomposition pd = peirce_from_idempotent(alg, e);
        const auto dims = pd.gma.block_dims();
        if (dims[0] > 2 || dims[1] > 2 || dims[2] > 2 || dims[3] > 2 || dims[1] + dims[2] == 0) continue;

        Matrix p(alg.dim(), alg.dim());
        for (Block b : {Block::A, Block::M, Block::N, Block::B})
            if (pd.gma.block_dim(b) > 0)
                p.set_block(pd.gma.block_offset(b), pd.gma.block_offset(b), random_invertible(rng, pd.gma.block_dim(b)));
        Gma shuffled(change_basis(pd.gma.algebra(), p), dims);
        return assemble(shuffled.to_context());
    }
}

CatalogEntry catalog_entry(const std::string& spec) {
    static const std::regex call(R"(^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\((.*)\))?\s*$)");
    std::smatch m;
    if (std::regex_match(spec, m, call)) {
        const std::string name = m[1];
        const bool has_args = m[2].matched;
        const std::vector<std::string> args = has_args ? split_args(m[2]) : std::vector<std::string>{};
        auto no_args = [&] {
            if (has_args) invalid(name + " takes no arguments");
        };
        if (name == "upper_triangular" || name == "full_matrix") return matrix_entry(name, args);
        if (name == "example_1_2") {
            no_args();
            Example12 ex = example_1_2();
            CatalogEntry e = from_gma("example_1_2",
                                      "2x2 matrices over the algebra spanned by E12, E23, E13 in 3x3 matrices; "
                                      "non-unital; encoded over the rationals",
                                      ex.u);
            e.probe = ex.a0;
            return e;
        }
        if (name == "dual_tri") {
            no_args();
            auto d = dual_numbers();
            return from_gma("dual_tri", "[D D; 0 D] with D = Q[x]/(x^2)", tri(d, regular_bimodule(d), d));
        }
        if (name == "dual_over_q") {
            no_args();
            auto d = dual_numbers();
            std::vector<Rational> right(2 * 1 * 2);
            right[(0 * 1 + 0) * 2 + 0] = 1;
            right[(1 * 1 + 0) * 2 + 1] = 1;
            Bimodule mod{2, d.flat_table(), right};
            return from_gma("dual_over_q", "[D D; 0 Q] with D = Q[x]/(x^2) acting on itself, Q acting by scalars",
                            tri(d, mod, rationals()));
        }
        if (name == "q_plus_t2") {
            no_args();
            return CatalogEntry{"q_plus_t2", "Q direct sum upper triangular 2x2 matrices; no block structure",
                                direct_sum(rationals(), upper_triangular(2).algebra()), std::nullopt, std::nullopt};
        }
        if (name == "m2") {
            if (args.size() != 1) invalid("m2 takes one algebra document");
            auto a = structure_constants_from_json(read_json_file(args[0]));
            return from_gma("m2(" + args[0] + ")", "2x2 matrices over a document algebra", m2_of(a));
        }
        if (name == "tri") {
            if (args.size() != 3) invalid("tri takes algebra, bimodule and algebra documents");
            auto a = structure_constants_from_json(read_json_file(args[0]));
            auto mod = bimodule_from_json(read_json_file(args[1]), "bimodule");
            auto b = structure_constants_from_json(read_json_file(args[2]));
            return from_gma("tri(" + args[0] + "," + args[1] + "," + args[2] + ")", "triangular algebra from documents",
                            tri(a, mod, b));
        }
    }
    if (std::filesystem::is_regular_file(spec)) {
        Json doc = read_json_file(spec);
        if (doc.is_object() && doc.contains("table"))
            return CatalogEntry{spec, "algebra document", structure_constants_from_json(doc), std::nullopt, std::nullopt};
        if (doc.is_object() && doc.contains("A"))
            return from_gma(spec, "Morita context document", assemble(morita_context_from_json(doc)));
        invalid(spec + " is neither an algebra nor a Morita context document");
    }
    invalid("unknown algebra \"" + spec + "\"");
}

std::vector<CatalogEntry> builtin_catalog() {
    std::vector<CatalogEntry> out;
    for (const char* name : {"upper_triangular(2)", "upper_triangular(3)", "upper_triangular(3,2)", "full_matrix(2)",
                             "full_matrix(3)", "full_matrix(3,2)", "dual_tri", "dual_over_q", "q_plus_t2",
                             "example_1_2"})
        out.push_back(catalog_entry(name));
    return out;
}

}  // namespace ltc
