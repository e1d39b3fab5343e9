#include "plumb/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace plumb {

namespace {

[[noreturn]] void fail(const std::string& rule, const std::string& what)
{
    throw FormatError(rule + ": " + what);
}

long long get_int(const Json& j, const std::string& rule, const std::string& what)
{
    if (!j.is_number_integer())
        fail(rule, what + " must be an integer");
    if (j.is_number_unsigned() && j.get<unsigned long long>() > static_cast<unsigned long long>(
                                                                     std::numeric_limits<long long>::max()))
        fail(rule, what + " is out of range");
    return j.get<long long>();
}

const Json& member(const Json& j, const char* key, const std::string& rule)
{
    if (!j.is_object())
        fail(rule, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(rule, std::string("missing key \"") + key + "\"");
    return *it;
}

Integer integer_from_json(const Json& j, const std::string& rule, const std::string& what)
{
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            fail(rule, what + " is not a decimal integer");
        return x;
    }
    return Integer(static_cast<long>(get_int(j, rule, what)));
}

CFSeq seq_from_json(const Json& j, const std::string& rule)
{
    if (!j.is_array())
        fail(rule, "a sequence must be an array of integers");
    std::vector<long long> v;
    for (const Json& x : j)
        v.push_back(get_int(x, rule, "sequence entry"));
    try {
        return CFSeq(v);
    } catch (const std::invalid_argument& e) {
        fail(rule, e.what());
    }
}

}  // namespace

Json integer_json(const Integer& x)
{
    if (x.fits_slong_p())
        return Json(static_cast<long long>(x.get_si()));
    return Json(x.get_str());
}

std::string rational_text(const Rational& r) { return r.str(); }

Json graph_json(const PlumbingGraph& g)
{
    Json vertices = Json::array();
    for (VertexId v : g.vertex_ids())
        vertices.push_back(Json{{"id", v}, {"weight", g.weight(v)}});
    Json edges = Json::array();
    for (auto [a, b] : g.edges())
        edges.push_back(Json::array({a, b}));
    return Json{{"vertices", vertices}, {"edges", edges}};
}

PlumbingGraph graph_from_json(const Json& j)
{
    const Json& vs = member(j, "vertices", "graph.shape");
    const Json& es = member(j, "edges", "graph.shape");
    if (!vs.is_array() || !es.is_array())
        fail("graph.shape", "\"vertices\" and \"edges\" must be arrays");
    PlumbingGraph g;
    for (const Json& v : vs) {
        long long id = get_int(member(v, "id", "graph.vertex"), "graph.vertex", "vertex id");
        long long w = get_int(member(v, "weight", "graph.vertex"), "graph.vertex", "vertex weight");
        if (id < 0 || id > std::numeric_limits<VertexId>::max())
            fail("graph.ids-nonnegative", "vertex id " + std::to_string(id) + " is out of range");
        if (g.has_vertex(static_cast<VertexId>(id)))
            fail("graph.ids-unique", "duplicate vertex id " + std::to_string(id));
        g.add_vertex(static_cast<VertexId>(id), w);
    }
    for (const Json& e : es) {
        if (!e.is_array() || e.size() != 2)
            fail("graph.edge-shape", "each edge must be a pair [i, j]");
        long long a = get_int(e[0], "graph.edge-shape", "edge endpoint");
        long long b = get_int(e[1], "graph.edge-shape", "edge endpoint");
        auto known = [&](long long x) { return x >= 0 && x <= std::numeric_limits<VertexId>::max() && g.has_vertex(static_cast<VertexId>(x)); };
        if (!known(a) || !known(b))
            fail("graph.edge-endpoints", "edge [" + std::to_string(a) + "," + std::to_string(b) +
                                             "] names a missing vertex");
        if (a == b)
            fail("graph.no-loops", "loop at vertex " + std::to_string(a));
        if (g.has_edge(static_cast<VertexId>(a), static_cast<VertexId>(b)))
            fail("graph.simple", "duplicate edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
        g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    return g;
}

Json embedding_json(const LatticeEmbedding& f)
{
    Json vectors = Json::object();
    for (const auto& [id, vec] : f.vectors)
        vectors[std::to_string(id)] = vec;
    return Json{{"rank", f.rank}, {"vectors", vectors}};
}

LatticeEmbedding embedding_from_json(const Json& j)
{
    long long rank = get_int(member(j, "rank", "embedding.shape"), "embedding.shape", "rank");
    if (rank < 0)
        fail("embedding.rank", "rank must be nonnegative");
    const Json& vs = member(j, "vectors", "embedding.shape");
    if (!vs.is_object())
        fail("embedding.shape", "\"vectors\" must be an object keyed by vertex id");
    LatticeEmbedding f;
    f.rank = static_cast<std::size_t>(rank);
    for (const auto& [key, vec] : vs.items()) {
        std::size_t used = 0;
        long long id = -1;
        try {
            id = std::stoll(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || id < 0 || id > std::numeric_limits<VertexId>::max() ||
            std::to_string(id) != key)
            fail("embedding.keys", "\"" + key + "\" is not a vertex id");
        if (!vec.is_array() || vec.size() != f.rank)
            fail("embedding.rank", "vector of vertex " + key + " must have " + std::to_string(rank) + " entries");
        LatticeVector v;
        for (const Json& x : vec)
            v.push_back(get_int(x, "embedding.coefficients", "coefficient"));
        f.vectors[static_cast<VertexId>(id)] = std::move(v);
    }
    return f;
}

Json matrix_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.dim(); ++k)
            row.push_back(integer_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j)
{
    if (!j.is_array())
        fail("matrix.shape", "expected an array of rows");
    IntMatrix m(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != j.size())
            fail("matrix.square", "row " + std::to_string(i) + " must have " + std::to_string(j.size()) + " entries");
        for (std::size_t k = 0; k < j.size(); ++k)
            m(i, k) = integer_from_json(j[i][k], "matrix.entries", "entry");
    }
    return m;
}

Json surgery_json(const SurgeryDescription& d)
{
    return Json{{"p", integer_json(d.p)}, {"alpha", integer_json(d.alpha)}, {"n", rational_text(d.n)}};
}

SurgeryDescription surgery_from_json(const Json& j)
{
    SurgeryDescription d;
    d.p = integer_from_json(member(j, "p", "surgery.shape"), "surgery.shape", "p");
    d.alpha = integer_from_json(member(j, "alpha", "surgery.shape"), "surgery.shape", "alpha");
    const Json& n = member(j, "n", "surgery.shape");
    try {
        d.n = n.is_string() ? Rational::parse(n.get<std::string>())
                            : Rational(integer_from_json(n, "surgery.shape", "n"));
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        fail("surgery.n", e.what());
    }
    return d;
}

Json instance_json(const FamilyInstance& inst)
{
    Json pairs = Json::array();
    for (const auto& p : inst.pairs)
        pairs.push_back(Json::array({p.first.entries(), p.second.entries()}));
    std::string tag = to_string(inst.tag).substr(1);
    return Json{{"tag", tag}, {"pairs", pairs}, {"k", inst.k}};
}

FamilyInstance instance_from_json(const Json& j)
{
    FamilyInstance inst;
    const Json& tag = member(j, "tag", "instance.shape");
    try {
        inst.tag = parse_family_tag(tag.is_string() ? tag.get<std::string>() : tag.dump());
    } catch (const std::invalid_argument& e) {
        fail("instance.tag", e.what());
    }
    const Json& pairs = member(j, "pairs", "instance.shape");
    if (!pairs.is_array())
        fail("instance.shape", "\"pairs\" must be an array");
    for (const Json& p : pairs) {
        if (!p.is_array() || p.size() != 2)
            fail("instance.pair-shape", "each pair must be [[...],[...]]");
        inst.pairs.push_back({seq_from_json(p[0], "instance.sequence"), seq_from_json(p[1], "instance.sequence")});
    }
    if (j.contains("k")) {
        long long k = get_int(j["k"], "instance.k", "k");
        if (k < 0 || k > std::numeric_limits<int>::max())
            fail("instance.k", "k must be a nonnegative int");
        inst.k = static_cast<int>(k);
    }
    return inst;
}

Json certificate_json(const FamilyInstance& inst, const QHBCertificate& cert)
{
    Json j = instance_json(inst);
    j["embedding_verified"] = cert.embedding_verified;
    j["det"] = integer_json(cert.det);
    j["sqrt"] = cert.det_sqrt ? integer_json(*cert.det_sqrt) : Json(nullptr);
    if (cert.has_handles) {
        Json snf = Json::array();
        for (const Integer& x : cert.handle_snf.invariant_factors)
            snf.push_back(integer_json(x));
        j["handle_snf"] = snf;
        j["corank"] = cert.corank;
        j["expected_corank"] = cert.expected_corank;
        j["free_cokernel"] = cert.free_cokernel;
    }
    j["passed"] = cert.passed();
    j["failures"] = cert.failures;
    return j;
}

Json theorem_row_json(const TheoremRow& row)
{
    Json params = Json::object();
    for (const auto& [name, value] : row.params)
        params[name] = value;
    Json j{{"family", row.family}, {"params", params}, {"p", integer_json(row.p)}, {"q", integer_json(row.q)}};
    j["r"] = row.r ? Json(rational_text(*row.r)) : Json(nullptr);
    if (!row.note.empty())
        j["note"] = row.note;
    return j;
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail("json.syntax", e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail("io.read", "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

std::string export_dot(const PlumbingGraph& g)
{
    std::ostringstream out;
    out << "graph plumbing {\n";
    for (VertexId v : g.vertex_ids())
        out << "  v" << v << " [label=\"" << g.weight(v) << "\"];\n";
    for (auto [a, b] : g.edges())
        out << "  v" << a << " -- v" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace plumb
