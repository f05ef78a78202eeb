#include "matrex.h"

#include <cstring>
#include <optional>
#include <sstream>
#include <string>

#include "matrex/exchange.hpp"
#include "matrex/families.hpp"
#include "matrex/functors.hpp"
#include "matrex/io.hpp"
#include "matrex/matroid.hpp"

using namespace matrex;

struct mx_family {
    SetFamily fam;
    // Built on first matroid-only query; reused by later calls.
    mutable std::optional<Matroid> matroid;
};
struct mx_graph {
    MultiGraph g;
};
struct mx_system {
    SetSystem s;
};
struct mx_alpha {
    ExpansionVector a;
};

namespace {

thread_local std::string g_last_error;

mx_status fail(mx_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
mx_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return fail(MX_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return fail(MX_ERR_INVALID, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const Matroid& as_matroid(const mx_family* f) {
    if (!f->matroid) f->matroid.emplace(f->fam);  // throws if not a matroid
    return *f->matroid;
}

std::vector<Label> parse_label_list(const char* text) {
    std::vector<Label> out;
    std::istringstream in(text ? text : "");
    std::string tok;
    while (in >> tok) {
        for (char& c : tok)
            if (c == ',') c = ' ';
        std::istringstream sub(tok);
        std::string item;
        while (sub >> item) out.push_back(Label::parse(item));
    }
    return out;
}

mx_status require(const void* p, const char* what) {
    if (p) return MX_OK;
    return fail(MX_ERR_INVALID, std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* mx_last_error(void) { return g_last_error.c_str(); }

void mx_string_free(char* s) { delete[] s; }
void mx_family_free(mx_family* f) { delete f; }
void mx_graph_free(mx_graph* g) { delete g; }
void mx_system_free(mx_system* s) { delete s; }
void mx_alpha_free(mx_alpha* a) { delete a; }

mx_status mx_family_parse(const char* text, mx_family** out) {
    if (require(text, "text") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = new mx_family{parse_family(text), std::nullopt};
        return MX_OK;
    });
}

mx_status mx_graph_parse(const char* text, mx_graph** out) {
    if (require(text, "text") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = new mx_graph{parse_graph(text)};
        return MX_OK;
    });
}

mx_status mx_system_parse(const char* text, mx_system** out) {
    if (require(text, "text") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = new mx_system{parse_system(text)};
        return MX_OK;
    });
}

mx_status mx_alpha_parse(const char* text, mx_alpha** out) {
    if (require(text, "text") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = new mx_alpha{parse_alpha(text)};
        return MX_OK;
    });
}

mx_status mx_alpha_from_csv(const char* csv, mx_alpha** out) {
    if (require(csv, "csv") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        ExpansionVector a;
        std::string text(csv);
        for (char& c : text)
            if (c == ',') c = ' ';
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v < 1)
                throw std::invalid_argument("bad multiplicity '" + tok + "'");
            a.push_back(v);
        }
        if (a.empty()) throw std::invalid_argument("empty multiplicity list");
        *out = new mx_alpha{std::move(a)};
        return MX_OK;
    });
}

mx_status mx_family_serialize(const mx_family* f, char** out_text) {
    if (require(f, "family") || require(out_text, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out_text = dup_string(serialize_family(f->fam));
        return MX_OK;
    });
}

mx_status mx_family_is_antichain(const mx_family* f, int* out) {
    if (require(f, "family") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = is_antichain(f->fam.sets) ? 1 : 0;
        return MX_OK;
    });
}

mx_status mx_family_is_matroid(const mx_family* f, int* out) {
    if (require(f, "family") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = is_matroid(f->fam) ? 1 : 0;
        return MX_OK;
    });
}

mx_status mx_family_rank(const mx_family* f, int* out) {
    if (require(f, "family") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = as_matroid(f).rank();
        return MX_OK;
    });
}

mx_status mx_family_circuits(const mx_family* f, char** out_text) {
    if (require(f, "family") || require(out_text, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        const Matroid& m = as_matroid(f);
        std::string text;
        for (Mask c : m.circuits()) text += format_set(m.ground(), c) + "\n";
        *out_text = dup_string(text);
        return MX_OK;
    });
}

mx_status mx_family_is_binary(const mx_family* f, int* out) {
    if (require(f, "family") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = is_binary(as_matroid(f)) ? 1 : 0;
        return MX_OK;
    });
}

mx_status mx_family_is_contracted(const mx_family* f, int* out) {
    if (require(f, "family") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = is_contracted(f->fam) ? 1 : 0;
        return MX_OK;
    });
}

mx_status mx_family_restrict(const mx_family* f, const char* elements, mx_family** out) {
    if (require(f, "family") || require(elements, "elements") || require(out, "out"))
        return MX_ERR_INVALID;
    return guarded([&] {
        Mask keep = mask_from_labels(f->fam.ground, parse_label_list(elements));
        *out = new mx_family{restriction(as_matroid(f), keep).family(), std::nullopt};
        return MX_OK;
    });
}

mx_status mx_family_expand(const mx_family* f, const mx_alpha* a, mx_family** out) {
    if (require(f, "family") || require(a, "alpha") || require(out, "out"))
        return MX_ERR_INVALID;
    return guarded([&] {
        *out = new mx_family{expand_family(f->fam, a->a), std::nullopt};
        return MX_OK;
    });
}

mx_status mx_family_contract(const mx_family* f, mx_family** out) {
    if (require(f, "family") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = new mx_family{contract(f->fam).contracted, std::nullopt};
        return MX_OK;
    });
}

mx_status mx_family_direct_sum(const mx_family* a, const mx_family* b, mx_family** out) {
    if (require(a, "family") || require(b, "family") || require(out, "out"))
        return MX_ERR_INVALID;
    return guarded([&] {
        *out = new mx_family{direct_sum(as_matroid(a), as_matroid(b)).family(), std::nullopt};
        return MX_OK;
    });
}

mx_status mx_family_add_coloop(const mx_family* f, const char* element, mx_family** out) {
    if (require(f, "family") || require(element, "element") || require(out, "out"))
        return MX_ERR_INVALID;
    return guarded([&] {
        auto labels = parse_label_list(element);
        if (labels.size() != 1) throw std::invalid_argument("expected one element label");
        *out = new mx_family{add_coloop(as_matroid(f), labels[0]).family(), std::nullopt};
        return MX_OK;
    });
}

mx_status mx_family_isomorphism(const mx_family* a, const mx_family* b, int* out_found,
                                char** out_map_text) {
    if (require(a, "family") || require(b, "family") || require(out_found, "out") ||
        require(out_map_text, "out"))
        return MX_ERR_INVALID;
    return guarded([&] {
        const Matroid& m1 = as_matroid(a);
        const Matroid& m2 = as_matroid(b);
        auto image = matroids_isomorphic(m1, m2);
        if (!image) {
            *out_found = 0;
            *out_map_text = dup_string("");
            return MX_OK;
        }
        std::string text;
        for (int i = 0; i < m1.ground().size(); ++i)
            text += m1.ground()[i].str() + " -> " +
                    m2.ground()[(*image)[static_cast<size_t>(i)]].str() + "\n";
        *out_found = 1;
        *out_map_text = dup_string(text);
        return MX_OK;
    });
}

mx_status mx_uniform(int rank, int size, mx_family** out) {
    if (require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = new mx_family{uniform(rank, size).family(), std::nullopt};
        return MX_OK;
    });
}

mx_status mx_partition(const mx_system* partition, int rank, mx_family** out) {
    if (require(partition, "system") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = new mx_family{partition_matroid(partition->s, rank).family(), std::nullopt};
        return MX_OK;
    });
}

mx_status mx_graphic(const mx_graph* g, mx_family** out) {
    if (require(g, "graph") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = new mx_family{graphic_matroid(g->g).family(), std::nullopt};
        return MX_OK;
    });
}

mx_status mx_transversal(const mx_system* s, mx_family** out) {
    if (require(s, "system") || require(out, "out")) return MX_ERR_INVALID;
    return guarded([&] {
        *out = new mx_family{transversal_matroid(s->s).family(), std::nullopt};
        return MX_OK;
    });
}

mx_status mx_te_check(const mx_family* f, int exchange_class, int length, uint64_t budget,
                      int* out_verdict, char** out_text) {
    if (require(f, "family") || require(out_verdict, "out") || require(out_text, "out"))
        return MX_ERR_INVALID;
    return guarded([&] {
        TeOptions opt;
        if (budget) opt.max_nodes = budget;
        TeResult r = te_check(as_matroid(f), exchange_class, length, opt);
        std::string text = std::string(to_string(r.verdict)) + "\n";
        if (r.witness) {
            const GroundSet& g = f->fam.ground;
            for (int side = 0; side < 2; ++side) {
                text += side == 0 ? "witness_a" : "witness_b";
                for (Mask bmask : r.witness->sequences[static_cast<size_t>(side)])
                    text += " | " + format_set(g, bmask);
                text += "\n";
            }
        }
        *out_verdict = static_cast<int>(r.verdict);
        *out_text = dup_string(text);
        return MX_OK;
    });
}

mx_status mx_white_report(const mx_family* f, int m_max, uint64_t budget, int kv_format,
                          int* out_all_hold, char** out_text) {
    if (require(f, "family") || require(out_all_hold, "out") || require(out_text, "out"))
        return MX_ERR_INVALID;
    return guarded([&] {
        TeOptions opt;
        if (budget) opt.max_nodes = budget;
        WhiteReport r = white_report(as_matroid(f), m_max, opt);
        *out_all_hold = r.all_hold ? 1 : 0;
        *out_text = dup_string(render_white_report(r, kv_format != 0));
        return MX_OK;
    });
}

}  // extern "C"
