#include "sle/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "sle/errors.hpp"

namespace sle {

using json = nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("field '") + key + "' has the wrong type");
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct RankedEdge {
    int lo, hi, page;
    std::string u, v;
};

json edge_list(std::vector<RankedEdge> es, bool with_page) {
    std::sort(es.begin(), es.end(), [](const RankedEdge& a, const RankedEdge& b) {
        return std::tie(a.lo, a.hi, a.page) < std::tie(b.lo, b.hi, b.page);
    });
    json out = json::array();
    for (const auto& e : es) {
        json j = {{"u", e.u}, {"v", e.v}};
        if (with_page) j["page"] = e.page;
        out.push_back(j);
    }
    return out;
}

}  // namespace

std::string emit_instance(const Instance& inst) {
    json j;
    j["ell"] = inst.ell;
    json spine = json::array();
    for (VertexId v : inst.layoutH.spine.sequence()) spine.push_back(inst.name(v));
    std::vector<RankedEdge> old_es, new_es;
    for (const auto& [e, p] : inst.old_edges())
        old_es.push_back({e.u.value, e.v.value, p, inst.name(e.u), inst.name(e.v)});
    for (const Edge& e : inst.new_edges()) new_es.push_back({e.u.value, e.v.value, 0, inst.name(e.u), inst.name(e.v)});
    j["H"] = {{"spine", spine}, {"edges", edge_list(old_es, true)}};
    json nv = json::array();
    for (VertexId v : inst.new_vertices()) nv.push_back(inst.name(v));
    j["new_vertices"] = nv;
    j["new_edges"] = edge_list(new_es, false);
    return dump(j);
}

Instance parse_instance(const std::string& text) {
    json j = parse_json(text);
    InstanceBuilder b(field<int>(j, "ell"));
    json h = field<json>(j, "H");
    b.spine(field<std::vector<std::string>>(h, "spine"));
    for (const json& e : field<json>(h, "edges"))
        b.old_edge(field<std::string>(e, "u"), field<std::string>(e, "v"), field<int>(e, "page"));
    for (const auto& v : field<std::vector<std::string>>(j, "new_vertices")) b.new_vertex(v);
    for (const json& e : field<json>(j, "new_edges")) b.new_edge(field<std::string>(e, "u"), field<std::string>(e, "v"));
    return b.build();
}

std::string emit_solution(const Instance& inst, const Layout& layout) {
    json j;
    json spine = json::array();
    for (VertexId v : layout.spine.sequence()) spine.push_back(inst.name(v));
    j["spine"] = spine;
    std::vector<RankedEdge> es;
    for (const auto& [e, p] : layout.pages) {
        int a = layout.spine.rank(e.u), b = layout.spine.rank(e.v);
        VertexId lo = a < b ? e.u : e.v, hi = a < b ? e.v : e.u;
        es.push_back({std::min(a, b), std::max(a, b), p, inst.name(lo), inst.name(hi)});
    }
    j["pages"] = edge_list(es, true);
    return dump(j);
}

Layout parse_solution(const Instance& inst, const std::string& text) {
    json j = parse_json(text);
    Layout L;
    L.ell = inst.ell;
    std::vector<VertexId> seq;
    for (const auto& nm : field<std::vector<std::string>>(j, "spine")) {
        if (!inst.has_name(nm)) throw InputError("solution names unknown vertex '" + nm + "'");
        seq.push_back(inst.id_of(nm));
    }
    std::vector<VertexId> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("solution spine lists a vertex twice");
    L.spine = SpineOrder(seq);
    for (const json& e : field<json>(j, "pages")) {
        auto u = field<std::string>(e, "u"), v = field<std::string>(e, "v");
        if (!inst.has_name(u) || !inst.has_name(v)) throw InputError("solution edge " + u + "-" + v + " has an unknown endpoint");
        if (!L.pages.emplace(Edge(inst.id_of(u), inst.id_of(v)), field<int>(e, "page")).second)
            throw InputError("solution assigns edge " + u + "-" + v + " twice");
    }
    return L;
}

std::string emit_certificate(const ReductionCertificate& c) {
    json j;
    j["kind"] = c.kind == ReductionCertificate::Kind::Sat3 ? "3sat" : c.kind == ReductionCertificate::Kind::Mcc ? "mcc" : "gadget";
    j["ell"] = c.ell;
    j["pd"] = c.pd;
    j["gadget_v"] = c.gadget_v;
    j["gadget_f"] = c.gadget_f;
    if (c.kind == ReductionCertificate::Kind::Sat3) {
        j["num_vars"] = c.num_vars;
        j["s"] = c.s;
        j["v"] = c.v;
        j["var_vertex"] = c.var_vertex;
        j["page_pos"] = c.page_pos;
        j["page_neg"] = c.page_neg;
        j["clause_vertex"] = c.clause_vertex;
    }
    if (c.kind == ReductionCertificate::Kind::Mcc) {
        j["original"] = c.original;
        j["copy"] = c.copy;
        j["x"] = c.x;
        json ep = json::array();
        for (const auto& [a, b, p] : c.edge_page) ep.push_back({{"u", a}, {"v", b}, {"page", p}});
        j["edge_page"] = ep;
    }
    return dump(j);
}

ReductionCertificate parse_certificate(const std::string& text) {
    json j = parse_json(text);
    ReductionCertificate c;
    auto kind = field<std::string>(j, "kind");
    if (kind == "3sat")
        c.kind = ReductionCertificate::Kind::Sat3;
    else if (kind == "mcc")
        c.kind = ReductionCertificate::Kind::Mcc;
    else if (kind == "gadget")
        c.kind = ReductionCertificate::Kind::Gadget;
    else
        throw CorruptCertificate("unknown certificate kind '" + kind + "'");
    c.ell = field<int>(j, "ell");
    c.pd = field<int>(j, "pd");
    c.gadget_v = field<std::vector<std::string>>(j, "gadget_v");
    c.gadget_f = field<std::vector<std::string>>(j, "gadget_f");
    if (c.kind == ReductionCertificate::Kind::Sat3) {
        c.num_vars = field<int>(j, "num_vars");
        c.s = field<std::string>(j, "s");
        c.v = field<std::string>(j, "v");
        c.var_vertex = field<std::vector<std::string>>(j, "var_vertex");
        c.page_pos = field<std::vector<int>>(j, "page_pos");
        c.page_neg = field<std::vector<int>>(j, "page_neg");
        c.clause_vertex = field<std::vector<std::string>>(j, "clause_vertex");
        if (int(c.var_vertex.size()) != c.num_vars || c.page_pos.size() != c.var_vertex.size() ||
            c.page_neg.size() != c.var_vertex.size())
            throw CorruptCertificate("variable maps disagree in length");
    }
    if (c.kind == ReductionCertificate::Kind::Mcc) {
        c.original = field<std::vector<std::vector<std::string>>>(j, "original");
        c.copy = field<std::vector<std::vector<std::string>>>(j, "copy");
        c.x = field<std::vector<std::string>>(j, "x");
        for (const json& e : field<json>(j, "edge_page"))
            c.edge_page.emplace_back(field<std::string>(e, "u"), field<std::string>(e, "v"), field<int>(e, "page"));
        if (c.original.size() != c.x.size() || c.copy.size() != c.x.size())
            throw CorruptCertificate("color maps disagree in length");
        for (std::size_t a = 0; a < c.x.size(); ++a)
            if (c.copy[a].size() != c.original[a].size() + 2) throw CorruptCertificate("copy list of color " + std::to_string(a + 1) + " has the wrong length");
    }
    return c;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula phi;
    int declared_clauses = -1;
    std::vector<int> pending;
    auto flush = [&]() {
        if (pending.size() != 3)
            throw InputError("clause " + std::to_string(phi.clauses.size() + 1) + " has " +
                             std::to_string(pending.size()) + " literals, expected 3");
        std::array<Literal, 3> cl;
        for (int t = 0; t < 3; ++t) cl[t] = Literal{std::abs(pending[t]), pending[t] < 0};
        phi.clauses.push_back(cl);
        pending.clear();
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok[0] == '%') continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> phi.num_vars >> declared_clauses) || fmt != "cnf")
                throw InputError("malformed DIMACS problem line");
            continue;
        }
        ls.clear();
        ls.str(line);
        long lit;
        while (ls >> lit) {
            if (lit == 0)
                flush();
            else
                pending.push_back(int(lit));
        }
        if (!ls.eof()) throw InputError("non-numeric token in DIMACS clause line");
    }
    if (!pending.empty()) flush();
    if (declared_clauses < 0) throw InputError("DIMACS input has no problem line");
    if (declared_clauses != int(phi.clauses.size()))
        throw InputError("DIMACS header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(phi.clauses.size()));
    phi.validate();
    return phi;
}

std::string emit_dimacs(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << " " << phi.clauses.size() << "\n";
    for (const auto& cl : phi.clauses) {
        for (const Literal& l : cl) out << (l.negated ? -l.var : l.var) << " ";
        out << "0\n";
    }
    return out.str();
}

MccInput parse_mcc(const std::string& text) {
    json j = parse_json(text);
    std::map<int, std::vector<std::string>> by_color;
    for (const json& v : field<json>(j, "vertices")) {
        int c = field<int>(v, "color");
        if (c < 1) throw InputError("colors start at 1");
        by_color[c].push_back(field<std::string>(v, "name"));
    }
    MccInput inp;
    int expect = 1;
    for (auto& [c, names] : by_color) {
        if (c != expect++) throw InputError("color " + std::to_string(expect - 1) + " has no vertices");
        inp.parts.push_back(names);
    }
    for (const json& e : field<json>(j, "edges")) inp.edges.emplace_back(field<std::string>(e, "u"), field<std::string>(e, "v"));
    inp.validate();
    return inp;
}

std::string emit_mcc(const MccInput& inp) {
    json j;
    json vs = json::array(), es = json::array();
    for (int a = 0; a < inp.k(); ++a)
        for (const auto& v : inp.parts[a]) vs.push_back({{"name", v}, {"color", a + 1}});
    for (const auto& [u, v] : inp.edges) es.push_back({{"u", u}, {"v", v}});
    j["vertices"] = vs;
    j["edges"] = es;
    return dump(j);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

}  // namespace sle
