// Command-line front end. Exit codes: 0 success, 2 a clean negative answer
// (no embedding, not recognized, failed check), 1 any error.

#include "plumb/io.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace plumb;

namespace {

constexpr int kNegative = 2;

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

// A file holding either a graph object or a square matrix.
IntMatrix matrix_input(const std::string& path)
{
    Json j = read_json_file(path);
    if (j.is_object())
        return intersection_matrix(graph_from_json(j));
    return matrix_from_json(j);
}

std::vector<VertexId> parse_roles(const std::string& text)
{
    std::vector<VertexId> out;
    for (long long x : parse_sequence(text))
        out.push_back(static_cast<VertexId>(x));
    return out;
}

// "3:2,2" -> ([3], [2,2])
ComplementaryPair parse_pair(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("pair \"" + text + "\" must look like 3:2,2");
    return {CFSeq(parse_sequence(text.substr(0, colon))), CFSeq(parse_sequence(text.substr(colon + 1)))};
}

Json embedded_json(const EmbeddedGraph& eg)
{
    return Json{{"graph", graph_json(eg.graph)}, {"embedding", embedding_json(eg.embedding)}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Plumbing graphs, lattice embeddings and torus knot surgeries"};
    app.require_subcommand(1);
    int code = 0;

    // ncf
    auto* ncf = app.add_subcommand("ncf", "negative continued fractions")->require_subcommand(1);
    std::string seq_a, seq_b, rational_text_in;
    bool general = false;
    auto* ncf_eval = ncf->add_subcommand("eval", "evaluate a sequence");
    ncf_eval->add_option("seq", seq_a, "entries, e.g. 5,3,2,2")->required();
    ncf_eval->callback([&] { std::cout << eval_ncf(parse_sequence(seq_a)).str() << "\n"; });
    auto* ncf_expand = ncf->add_subcommand("expand", "expand a rational");
    ncf_expand->add_option("r", rational_text_in, "a or a/b")->required();
    ncf_expand->add_flag("--general", general, "allow any first entry (any rational)");
    ncf_expand->callback([&] {
        Rational r = Rational::parse(rational_text_in);
        std::cout << (general ? format_sequence(expand_ncf_general(r)) : expand_ncf(r).str()) << "\n";
    });
    auto* ncf_dual = ncf->add_subcommand("dual", "complementary sequence");
    ncf_dual->add_option("seq", seq_a)->required();
    ncf_dual->callback([&] { std::cout << riemenschneider_dual(CFSeq(parse_sequence(seq_a))).str() << "\n"; });
    auto* ncf_comp = ncf->add_subcommand("complementary", "are two sequences complementary");
    ncf_comp->add_option("a", seq_a)->required();
    ncf_comp->add_option("b", seq_b)->required();
    ncf_comp->callback([&] {
        bool yes = is_complementary(CFSeq(parse_sequence(seq_a)), CFSeq(parse_sequence(seq_b)));
        std::cout << (yes ? "true" : "false") << "\n";
        if (!yes)
            code = kNegative;
    });

    // matrix
    auto* matrix = app.add_subcommand("matrix", "determinant, Smith form, definiteness")->require_subcommand(1);
    std::string in_path;
    auto* m_det = matrix->add_subcommand("det", "determinant");
    m_det->add_option("file", in_path, "graph JSON or square matrix JSON")->required();
    m_det->callback([&] { std::cout << det(matrix_input(in_path)).get_str() << "\n"; });
    auto* m_snf = matrix->add_subcommand("snf", "Smith normal form");
    m_snf->add_option("file", in_path)->required();
    m_snf->callback([&] {
        SNFResult s = smith_normal_form(matrix_input(in_path));
        Json f = Json::array();
        for (const Integer& x : s.invariant_factors)
            f.push_back(integer_json(x));
        emit(Json{{"invariant_factors", f}, {"corank", s.corank()}, {"free_cokernel", s.free_cokernel()}});
    });
    auto* m_def = matrix->add_subcommand("definite", "negative definiteness and inertia");
    m_def->add_option("file", in_path)->required();
    m_def->callback([&] {
        IntMatrix m = matrix_input(in_path);
        Inertia in = inertia(m);
        bool neg = is_negative_definite(m);
        emit(Json{{"negative_definite", neg},
                  {"positive", in.positive},
                  {"negative", in.negative},
                  {"zero", in.zero}});
        if (!neg)
            code = kNegative;
    });

    // graph
    auto* graph = app.add_subcommand("graph", "graph utilities")->require_subcommand(1);
    auto* g_dot = graph->add_subcommand("dot", "DOT export");
    g_dot->add_option("file", in_path)->required();
    g_dot->callback([&] { std::cout << export_dot(graph_from_json(read_json_file(in_path))); });

    // embed
    auto* embed = app.add_subcommand("embed", "lattice embeddings")->require_subcommand(1);
    std::string emb_path;
    std::size_t rank = 0;
    long long coeff_bound = -1;
    auto* e_verify = embed->add_subcommand("verify", "check an embedding against a graph");
    e_verify->add_option("graph", in_path)->required();
    e_verify->add_option("embedding", emb_path)->required();
    e_verify->callback([&] {
        bool ok = verify_embedding(graph_from_json(read_json_file(in_path)),
                                   embedding_from_json(read_json_file(emb_path)));
        std::cout << (ok ? "valid" : "invalid") << "\n";
        if (!ok)
            code = kNegative;
    });
    auto* e_search = embed->add_subcommand("search", "search for an embedding");
    e_search->add_option("graph", in_path)->required();
    e_search->add_option("--rank", rank, "target rank (default: vertex count)");
    e_search->add_option("--coeff-bound", coeff_bound, "largest |coefficient| (default: floor sqrt max |weight|)");
    e_search->callback([&] {
        PlumbingGraph g = graph_from_json(read_json_file(in_path));
        std::size_t r = rank ? rank : g.vertex_count();
        long long b = coeff_bound >= 0 ? coeff_bound : default_coeff_bound(g);
        auto f = search_embedding(g, r, b);
        if (!f) {
            std::cerr << "no embedding in rank " << r << " with coefficients up to " << b << "\n";
            code = kNegative;
            return;
        }
        emit(embedding_json(*f));
    });

    // move
    auto* move = app.add_subcommand("move", "grow an embedded graph")->require_subcommand(1);
    std::size_t basis = 0;
    std::string roles;
    auto add_move = [&](const char* name, MoveKind kind, const char* help) {
        auto* c = move->add_subcommand(name, help);
        c->add_option("graph", in_path)->required();
        c->add_option("embedding", emb_path)->required();
        c->add_option("--basis", basis, "basis vector, 1-based")->required()->check(CLI::PositiveNumber);
        c->add_option("--roles", roles, "vertex ids a,b (gocl) or a,b,c (igocl)")->required();
        c->callback([&, kind] {
            EmbeddedGraph eg{graph_from_json(read_json_file(in_path)), embedding_from_json(read_json_file(emb_path))};
            emit(embedded_json(apply_move(eg, MoveSite{kind, basis - 1, parse_roles(roles)})));
        });
    };
    add_move("gocl", MoveKind::GOCL, "attach a -2 leaf and lower a weight");
    add_move("igocl", MoveKind::IGOCL, "insert a -2 between two vertices and lower a weight");

    // family
    auto* family = app.add_subcommand("family", "growth families of the linear base graphs")->require_subcommand(1);
    std::string tag_text, out_dir;
    std::size_t max_vertices = 0;
    std::vector<std::string> pair_texts;
    int k = 0;
    auto* f_enum = family->add_subcommand("enumerate", "all graphs reachable by growth moves");
    f_enum->add_option("--tag", tag_text, "222, 2234, 3223 or 32333")->required();
    f_enum->add_option("--max-vertices", max_vertices)->required();
    f_enum->add_option("--out", out_dir, "write one JSON file per graph here");
    f_enum->callback([&] {
        FamilyTag tag = parse_family_tag(tag_text);
        auto all = enumerate_closure(tag, max_vertices);
        if (out_dir.empty()) {
            for (const auto& eg : all)
                emit(embedded_json(eg));
            return;
        }
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < all.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "graph_%05zu.json", i);
            std::ofstream out(std::filesystem::path(out_dir) / name);
            out << embedded_json(all[i]).dump() << "\n";
            if (!out)
                throw std::runtime_error(std::string("cannot write ") + name);
        }
        std::cout << all.size() << "\n";
    });
    auto* f_inst = family->add_subcommand("instance", "build one parameterised member");
    f_inst->add_option("--tag", tag_text)->required();
    f_inst->add_option("--pairs", pair_texts, "complementary pair as first:second, e.g. 3:2,2; repeat per pair");
    f_inst->add_option("--k", k, "length of the inner -2 chain")->check(CLI::NonNegativeNumber);
    f_inst->callback([&] {
        FamilyInstance inst;
        inst.tag = parse_family_tag(tag_text);
        for (const auto& t : pair_texts)
            inst.pairs.push_back(parse_pair(t));
        inst.k = k;
        emit(embedded_json(family_instance(inst)));
    });
    auto* f_cert = family->add_subcommand("certify", "determinant and handle-homology certificate");
    f_cert->add_option("instance", in_path, "instance JSON {\"tag\":..,\"pairs\":..,\"k\":..}")->required();
    f_cert->callback([&] {
        FamilyInstance inst = instance_from_json(read_json_file(in_path));
        QHBCertificate cert = qhb_certificate(inst);
        emit(certificate_json(inst, cert));
        if (!cert.passed())
            code = kNegative;
    });

    // surgery
    auto* surgery = app.add_subcommand("surgery", "surgeries on torus knots")->require_subcommand(1);
    std::string p_text, alpha_text, n_text;
    bool as_dot = false;
    auto* s_graph = surgery->add_subcommand("graph", "negative definite plumbing of S^3_n(T(p, alpha))");
    s_graph->add_option("p", p_text)->required();
    s_graph->add_option("alpha", alpha_text)->required();
    s_graph->add_option("n", n_text, "a or a/b")->required();
    s_graph->add_flag("--dot", as_dot, "print DOT instead of JSON");
    s_graph->callback([&] {
        Integer p, alpha;
        if (p.set_str(p_text, 10) != 0 || alpha.set_str(alpha_text, 10) != 0)
            throw std::invalid_argument("p and alpha must be integers");
        PlumbingGraph g = surgery_graph({p, alpha, Rational::parse(n_text)});
        if (as_dot)
            std::cout << export_dot(g);
        else
            emit(graph_json(g));
    });
    auto* s_rec = surgery->add_subcommand("recognize", "all surgery descriptions of a graph");
    s_rec->add_option("graph", in_path)->required();
    s_rec->callback([&] {
        PlumbingGraph g = graph_from_json(read_json_file(in_path));
        std::vector<SurgeryDescription> found;
        try {
            found = recognize_surgery(g);
        } catch (const NotRecognizable& e) {
            std::cerr << "not recognized: " << e.what() << "\n";
            code = kNegative;
            return;
        }
        Json arr = Json::array();
        for (const auto& d : found)
            arr.push_back(surgery_json(d));
        emit(arr);
        if (found.empty())
            code = kNegative;
    });

    // thm12
    auto* thm = app.add_subcommand("thm12", "torus knot families")->require_subcommand(1);
    int fam = 0;
    std::optional<long long> fk, fl, fn;
    long long range = 3, lens_max_p = 5;
    std::size_t resolve = 0;
    std::vector<std::string> lens_texts;
    auto* t_list = thm->add_subcommand("list", "(p, q, r) rows of one family");
    t_list->add_option("--family", fam, "1..16")->required()->check(CLI::Range(1, 16));
    t_list->add_option("--k", fk);
    t_list->add_option("--l", fl);
    t_list->add_option("--n", fn, "families 12 and 13");
    t_list->add_option("--range", range, "upper bound for unset parameters")->check(CLI::NonNegativeNumber);
    t_list->add_option("--lens", lens_texts, "P,Q pair (repeatable); families 12-16");
    t_list->add_option("--lens-max-p", lens_max_p, "without --lens, families 12-15 use L(p^2, pq+-1) with p up to this");
    t_list->add_option("--resolve", resolve, "fill pending r by searching growth closures up to this many vertices");
    t_list->callback([&] {
        TheoremFamily f;
        f.index = fam;
        f.k = fk;
        f.l = fl;
        f.n = fn;
        for (const auto& t : lens_texts) {
            auto v = parse_sequence(t);
            if (v.size() != 2)
                throw std::invalid_argument("--lens takes P,Q");
            f.lens.push_back({Integer(static_cast<long>(v[0])), Integer(static_cast<long>(v[1]))});
        }
        if (fam == 16 && f.lens.empty())
            throw std::invalid_argument("family 16 needs --lens P,Q pairs from the integral classification");
        if (fam >= 12 && f.lens.empty())
            f.lens = certified_lens_pairs(lens_max_p);
        auto rows = enumerate_theorem_families(f, range);
        if (resolve > 0)
            resolve_pending(rows, closure_surgeries(resolve));
        Json arr = Json::array();
        for (const auto& row : rows)
            arr.push_back(theorem_row_json(row));
        emit(arr);
    });
    long long max_index = 40;
    auto* t_id = thm->add_subcommand("identities", "check the sequence identities");
    t_id->add_option("--max-index", max_index)->check(CLI::NonNegativeNumber);
    t_id->callback([&] {
        IdentityReport rep = sequence_identities(max_index);
        emit(Json{{"checked", rep.checked}, {"passed", rep.passed()}, {"failures", rep.failures}});
        if (!rep.passed())
            code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
