#include "fqm/json_io.hpp"

#include <cstdio>

#include "json.hpp"

namespace fqm {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void append_complex_array(std::string& out, const std::vector<cd>& values) {
    out += '[';
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += '[';
        out += fmt(values[i].real());
        out += ',';
        out += fmt(values[i].imag());
        out += ']';
    }
    out += ']';
}

void append_int_array(std::string& out, const std::vector<int64_t>& values) {
    out += '[';
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    out += ']';
}

std::string sl2_object(const SL2Element& a) {
    return "{\"a\":" + std::to_string(a.a()) + ",\"b\":" + std::to_string(a.b()) +
           ",\"c\":" + std::to_string(a.c()) + ",\"d\":" + std::to_string(a.d()) + "}";
}

} // namespace

std::string dump_unitary(const DenseMap& m) {
    std::string out = "{\"kind\":\"unitary\",\"n\":" + std::to_string(m.dim()) + ",\"data\":";
    out.reserve(out.size() + m.values().size() * 48);
    append_complex_array(out, m.values());
    out += "}";
    return out;
}

std::string dump_permutation(const PermutationMap& p) {
    std::string out = "{\"kind\":\"permutation\",\"n\":" + std::to_string(p.n) + ",\"data\":";
    append_int_array(out, p.forward);
    out += "}";
    return out;
}

std::string dump_sl2(const SL2Element& a) {
    return "{\"kind\":\"sl2\",\"n\":" + std::to_string(a.modulus().value()) +
           ",\"data\":" + sl2_object(a) + "}";
}

std::string dump_vector(const std::vector<cd>& v) {
    std::string out = "{\"kind\":\"vector\",\"n\":" + std::to_string(v.size()) + ",\"data\":";
    append_complex_array(out, v);
    out += "}";
    return out;
}

std::string dump_factored(const FactoredMap& fm) {
    std::string out = "{\"kind\":\"factored\",\"n\":" + std::to_string(fm.ctx.value()) +
                      ",\"factors\":";
    std::vector<int64_t> factors;
    for (const auto& c : fm.ctx.components()) factors.push_back(c.modulus);
    append_int_array(out, factors);
    out += ",\"perm\":";
    append_int_array(out, fm.perm.forward);
    out += ",\"blocks\":[";
    for (size_t i = 0; i < fm.blocks.size(); ++i) {
        if (i) out += ',';
        out += dump_unitary(fm.blocks[i]);
    }
    out += "]}";
    return out;
}

std::string dump_sino(const SinoContext& ctx) {
    std::vector<int64_t> f, m, inv;
    for (const auto& c : ctx.components()) {
        f.push_back(c.modulus);
        m.push_back(c.cofactor);
        inv.push_back(c.cofactor_inverse);
    }
    std::string out = "{\"modulus\":" + std::to_string(ctx.value()) + ",\"factors\":";
    append_int_array(out, f);
    out += ",\"m\":";
    append_int_array(out, m);
    out += ",\"n\":";
    append_int_array(out, inv);
    out += "}";
    return out;
}

std::string dump_bench_json(const BenchReport& r) {
    std::string out = "{\"n\":" + std::to_string(r.n) + ",\"factors\":";
    append_int_array(out, r.factors);
    if (r.dense_ns) out += ",\"dense_ns\":" + fmt(*r.dense_ns);
    out += ",\"fast_ns\":" + fmt(r.fast_ns);
    if (r.ratio) out += ",\"ratio\":" + fmt(*r.ratio);
    out += ",\"madd_count\":" + std::to_string(r.madd_count) + "}";
    return out;
}

std::string dump_bench_csv(const BenchReport& r) {
    std::string factors;
    for (size_t i = 0; i < r.factors.size(); ++i) {
        if (i) factors += '*';
        factors += std::to_string(r.factors[i]);
    }
    std::string out = "n,factors,dense_ns,fast_ns,ratio,madd_count\n";
    out += std::to_string(r.n) + "," + factors + ",";
    if (r.dense_ns) out += fmt(*r.dense_ns);
    out += "," + fmt(r.fast_ns) + ",";
    if (r.ratio) out += fmt(*r.ratio);
    out += "," + std::to_string(r.madd_count) + "\n";
    return out;
}

std::string dump_orbit_partition_json(const SL2Element& a, int64_t order,
                                      const std::vector<OrbitClass>& classes) {
    std::string out = "{\"n\":" + std::to_string(a.modulus().value()) +
                      ",\"sl2\":" + sl2_object(a) + ",\"order\":" + std::to_string(order) +
                      ",\"orbit_count\":" + std::to_string(classes.size()) + ",\"orbits\":[";
    for (size_t i = 0; i < classes.size(); ++i) {
        if (i) out += ',';
        out += "{\"q\":" + std::to_string(classes[i].representative.q) +
               ",\"p\":" + std::to_string(classes[i].representative.p) +
               ",\"length\":" + std::to_string(classes[i].length) + "}";
    }
    out += "]}";
    return out;
}

std::string dump_orbit_partition_csv(const std::vector<OrbitClass>& classes) {
    std::string out = "q,p,length\n";
    for (const auto& c : classes)
        out += std::to_string(c.representative.q) + "," + std::to_string(c.representative.p) +
               "," + std::to_string(c.length) + "\n";
    return out;
}

std::string dump_orbit_point_json(const SL2Element& a, int64_t order,
                                  const std::vector<TorusPoint>& points) {
    std::string out = "{\"n\":" + std::to_string(a.modulus().value()) +
                      ",\"sl2\":" + sl2_object(a) + ",\"order\":" + std::to_string(order) +
                      ",\"start\":[" + std::to_string(points.front().q) + "," +
                      std::to_string(points.front().p) + "]" +
                      ",\"length\":" + std::to_string(points.size()) + ",\"points\":[";
    for (size_t i = 0; i < points.size(); ++i) {
        if (i) out += ',';
        out += "[" + std::to_string(points[i].q) + "," + std::to_string(points[i].p) + "]";
    }
    out += "]}";
    return out;
}

std::string dump_orbit_point_csv(const std::vector<TorusPoint>& points) {
    std::string out = "step,q,p\n";
    for (size_t i = 0; i < points.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(points[i].q) + "," +
               std::to_string(points[i].p) + "\n";
    return out;
}

std::string dump_verification(const VerificationReport& report) {
    std::string out = "{\"n\":" + std::to_string(report.n) +
                      ",\"samples\":" + std::to_string(report.samples) +
                      ",\"seed\":" + std::to_string(report.seed) +
                      ",\"tolerance_scale\":" + fmt(report.tolerance_scale) +
                      ",\"all_pass\":" + (report.all_pass() ? "true" : "false") +
                      ",\"invariants\":[";
    for (size_t i = 0; i < report.invariants.size(); ++i) {
        const auto& inv = report.invariants[i];
        if (i) out += ',';
        const char* status = inv.status == InvariantResult::Status::pass     ? "pass"
                             : inv.status == InvariantResult::Status::fail   ? "fail"
                                                                             : "n/a";
        out += "{\"name\":\"" + inv.name + "\",\"status\":\"" + status +
               "\",\"max_residual\":" + fmt(inv.max_residual) +
               ",\"tolerance\":" + fmt(inv.tolerance);
        if (!inv.note.empty()) out += ",\"note\":\"" + inv.note + "\"";
        out += "}";
    }
    out += "]}";
    return out;
}

namespace {

using nlohmann::json;

std::vector<cd> parse_complex_array(const json& arr, int64_t expected) {
    if (!arr.is_array() || static_cast<int64_t>(arr.size()) != expected)
        throw Error("document: data array has wrong length");
    std::vector<cd> out;
    out.reserve(arr.size());
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw Error("document: complex values must be [re, im] pairs");
        out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return out;
}

} // namespace

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("n"))
        throw Error("document: missing kind or n");

    Document doc;
    doc.n = j.at("n").get<int64_t>();
    const std::string kind = j.at("kind").get<std::string>();

    if (kind == "unitary") {
        doc.kind = DocKind::unitary;
        const auto values = parse_complex_array(j.at("data"), doc.n * doc.n);
        doc.matrix = DenseMap(doc.n);
        std::copy(values.begin(), values.end(), doc.matrix.data());
    } else if (kind == "permutation") {
        doc.kind = DocKind::permutation;
        doc.permutation = j.at("data").get<std::vector<int64_t>>();
        if (static_cast<int64_t>(doc.permutation.size()) != doc.n)
            throw Error("document: permutation length mismatch");
    } else if (kind == "sl2") {
        doc.kind = DocKind::sl2;
        const auto& data = j.at("data");
        doc.a = data.at("a").get<int64_t>();
        doc.b = data.at("b").get<int64_t>();
        doc.c = data.at("c").get<int64_t>();
        doc.d = data.at("d").get<int64_t>();
    } else if (kind == "vector") {
        doc.kind = DocKind::vector;
        doc.vec = parse_complex_array(j.at("data"), doc.n);
    } else if (kind == "factored") {
        doc.kind = DocKind::factored;
        doc.factors = j.at("factors").get<std::vector<int64_t>>();
        doc.perm_forward = j.at("perm").get<std::vector<int64_t>>();
        if (static_cast<int64_t>(doc.perm_forward.size()) != doc.n)
            throw Error("document: perm length mismatch");
        for (const auto& block : j.at("blocks")) {
            const int64_t bn = block.at("n").get<int64_t>();
            const auto values = parse_complex_array(block.at("data"), bn * bn);
            DenseMap m(bn);
            std::copy(values.begin(), values.end(), m.data());
            doc.blocks.push_back(std::move(m));
        }
    } else {
        throw Error("document: unknown kind '" + kind + "'");
    }
    return doc;
}

FactoredMap to_factored_map(const Document& doc) {
    if (doc.kind != DocKind::factored) throw Error("to_factored_map: not a factored document");
    SinoContext ctx((OddModulus(doc.n)));
    if (ctx.size() != doc.blocks.size())
        throw DimensionMismatchError("factored document: block count mismatch");
    for (size_t i = 0; i < ctx.size(); ++i)
        if (doc.blocks[i].dim() != ctx.components()[i].modulus)
            throw DimensionMismatchError("factored document: block dimension mismatch");

    PermutationMap perm;
    perm.n = doc.n;
    perm.forward = doc.perm_forward;
    perm.inverse.assign(doc.n, -1);
    for (int64_t j = 0; j < doc.n; ++j) {
        const int64_t img = perm.forward[j];
        if (img < 0 || img >= doc.n || perm.inverse[img] != -1)
            throw Error("factored document: perm is not a bijection");
        perm.inverse[img] = j;
    }
    return FactoredMap{ctx, std::move(perm), doc.blocks};
}

} // namespace fqm
