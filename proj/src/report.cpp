#include "idlab/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace idlab {

using ojson = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
    if (name == "text")
        return Format::text;
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    throw std::invalid_argument("unknown format '" + name + "' (expected text|json|csv)");
}

bool ChainReport::any_oracle_mismatch() const {
    return std::any_of(levels.begin(), levels.end(), [](const Level& l) {
        return l.match_oracle && !*l.match_oracle;
    });
}

bool ChainReport::any_prediction_mismatch() const {
    return std::any_of(levels.begin(), levels.end(), [](const Level& l) {
        return (l.predicted_total && *l.predicted_total != l.total) ||
               (l.predicted_by_k && *l.predicted_by_k != l.by_k);
    });
}

namespace {

ojson int_map_to_json(const std::map<int, i64>& m) {
    ojson out = ojson::object();
    for (const auto& [k, v] : m)
        out[std::to_string(k)] = v;
    return out;
}

std::map<int, i64> int_map_from_json(const ojson& j) {
    std::map<int, i64> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[std::stoi(it.key())] = it.value().get<i64>();
    return out;
}

std::string csv_opt(const std::optional<i64>& v) {
    return v ? std::to_string(*v) : "";
}

} // namespace

std::string chain_to_json(const ChainReport& rep) {
    ojson root;
    root["n"] = rep.n;
    root["levels"] = ojson::array();
    for (const ChainReport::Level& l : rep.levels) {
        ojson jl;
        jl["i"] = l.i;
        jl["h"] = l.h;
        jl["r"] = l.r;
        jl["by_k"] = int_map_to_json(l.by_k);
        jl["total"] = l.total;
        jl["predicted_by_k"] = l.predicted_by_k ? int_map_to_json(*l.predicted_by_k) : ojson(nullptr);
        jl["predicted_total"] = l.predicted_total ? ojson(*l.predicted_total) : ojson(nullptr);
        jl["oracle_total"] = l.oracle_total ? ojson(*l.oracle_total) : ojson(nullptr);
        jl["match_oracle"] = l.match_oracle ? ojson(*l.match_oracle) : ojson(nullptr);
        if (l.elements) {
            ojson je = ojson::object();
            for (const auto& [k, elems] : *l.elements)
                je[std::to_string(k)] = elems;
            jl["elements"] = je;
        } else {
            jl["elements"] = nullptr;
        }
        root["levels"].push_back(std::move(jl));
    }
    return root.dump(2) + "\n";
}

ChainReport chain_from_json(const std::string& text) {
    const ojson root = ojson::parse(text);
    ChainReport rep;
    rep.n = root.at("n").get<int>();
    for (const ojson& jl : root.at("levels")) {
        ChainReport::Level l;
        l.i = jl.at("i").get<i64>();
        l.h = jl.at("h").get<i64>();
        l.r = jl.at("r").get<i64>();
        l.by_k = int_map_from_json(jl.at("by_k"));
        l.total = jl.at("total").get<i64>();
        if (!jl.at("predicted_by_k").is_null())
            l.predicted_by_k = int_map_from_json(jl.at("predicted_by_k"));
        if (!jl.at("predicted_total").is_null())
            l.predicted_total = jl.at("predicted_total").get<i64>();
        if (!jl.at("oracle_total").is_null())
            l.oracle_total = jl.at("oracle_total").get<i64>();
        if (!jl.at("match_oracle").is_null())
            l.match_oracle = jl.at("match_oracle").get<bool>();
        if (!jl.at("elements").is_null()) {
            std::map<int, std::vector<std::string>> elems;
            const ojson& je = jl.at("elements");
            for (auto it = je.begin(); it != je.end(); ++it)
                elems[std::stoi(it.key())] = it.value().get<std::vector<std::string>>();
            l.elements = std::move(elems);
        }
        rep.levels.push_back(std::move(l));
    }
    return rep;
}

std::string render_chain(const ChainReport& rep, Format fmt) {
    if (fmt == Format::json)
        return chain_to_json(rep);
    std::ostringstream out;
    if (fmt == Format::csv) {
        out << "n,i,h,r,k,count,predicted,oracle,match\n";
        for (const ChainReport::Level& l : rep.levels) {
            for (const auto& [k, count] : l.by_k) {
                std::optional<i64> pred;
                if (l.predicted_by_k) {
                    auto it = l.predicted_by_k->find(k);
                    pred = it == l.predicted_by_k->end() ? 0 : it->second;
                }
                out << rep.n << ',' << l.i << ',' << l.h << ',' << l.r << ',' << k << ','
                    << count << ',' << csv_opt(pred) << ',' << csv_opt(l.oracle_total) << ','
                    << (l.match_oracle ? (*l.match_oracle ? "true" : "false") : "") << '\n';
            }
        }
        return out.str();
    }
    out << "chain n=" << rep.n << "\n";
    out << "    i    h    r  total  predicted  oracle  match  by_k\n";
    for (const ChainReport::Level& l : rep.levels) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%5lld%5lld%5lld%7lld",
                      static_cast<long long>(l.i), static_cast<long long>(l.h),
                      static_cast<long long>(l.r), static_cast<long long>(l.total));
        out << buf;
        std::snprintf(buf, sizeof buf, "  %9s", csv_opt(l.predicted_total).empty()
                                                    ? "-"
                                                    : csv_opt(l.predicted_total).c_str());
        out << buf;
        std::snprintf(buf, sizeof buf, "  %6s",
                      csv_opt(l.oracle_total).empty() ? "-" : csv_opt(l.oracle_total).c_str());
        out << buf;
        out << "  " << (l.match_oracle ? (*l.match_oracle ? "yes  " : "NO   ") : "-    ");
        bool first = true;
        for (const auto& [k, count] : l.by_k) {
            out << (first ? "  " : " ") << k << ':' << count;
            first = false;
        }
        out << '\n';
        if (l.elements)
            for (const auto& [k, elems] : *l.elements) {
                out << "      k=" << k << ":";
                for (const std::string& e : elems)
                    out << ' ' << e;
                out << '\n';
            }
    }
    return out.str();
}

std::string render_seq(const SeqReport& rep, Format fmt) {
    std::ostringstream out;
    if (fmt == Format::json) {
        ojson root;
        root["max"] = rep.max;
        root["a"] = rep.counts.a;
        root["b"] = rep.counts.b;
        root["c"] = rep.counts.c;
        if (rep.bfile_path) {
            ojson jb;
            jb["path"] = *rep.bfile_path;
            jb["match"] = rep.bfile_match();
            jb["first_diff"] = rep.first_diff ? ojson(*rep.first_diff) : ojson(nullptr);
            jb["compared"] = rep.compared;
            root["bfile"] = std::move(jb);
        } else {
            root["bfile"] = nullptr;
        }
        return root.dump(2) + "\n";
    }
    if (fmt == Format::csv) {
        out << "i,a,b,c\n";
        for (size_t i = 0; i < rep.counts.a.size(); ++i)
            out << i << ',' << rep.counts.a[i] << ',' << rep.counts.b[i] << ','
                << rep.counts.c[i] << '\n';
        return out.str();
    }
    auto row = [&](const char* name, const std::vector<i64>& v) {
        out << name << ':';
        for (i64 x : v)
            out << ' ' << x;
        out << '\n';
    };
    row("a", rep.counts.a);
    row("b", rep.counts.b);
    row("c", rep.counts.c);
    if (rep.bfile_path) {
        if (rep.bfile_match())
            out << "bfile: match (" << rep.compared << " terms compared)\n";
        else
            out << "bfile: mismatch at index " << *rep.first_diff << '\n';
    }
    return out.str();
}

std::string render_levels(const LevelsReport& rep, Format fmt) {
    std::ostringstream out;
    if (fmt == Format::json) {
        ojson root;
        root["n"] = rep.n;
        root["i"] = rep.i;
        root["h"] = rep.h;
        root["r"] = rep.r;
        ojson je = ojson::object();
        ojson jc = ojson::object();
        for (const auto& [k, elems] : rep.elements) {
            jc[std::to_string(k)] = elems.size();
            je[std::to_string(k)] = elems;
        }
        root["by_k"] = std::move(jc);
        root["elements"] = std::move(je);
        return root.dump(2) + "\n";
    }
    if (fmt == Format::csv) {
        out << "n,i,k,element\n";
        for (const auto& [k, elems] : rep.elements)
            for (const std::string& e : elems)
                out << rep.n << ',' << rep.i << ',' << k << ',' << e << '\n';
        return out.str();
    }
    out << "n=" << rep.n << " i=" << rep.i << " h=" << rep.h << " r=" << rep.r << '\n';
    for (const auto& [k, elems] : rep.elements) {
        out << "k=" << k << ": ";
        for (size_t t = 0; t < elems.size(); ++t)
            out << (t ? ", " : "") << elems[t];
        out << '\n';
    }
    return out.str();
}

std::string render_verify(const VerifyReport& rep, Format fmt) {
    std::ostringstream out;
    if (fmt == Format::json) {
        ojson root;
        root["n"] = rep.opts.n;
        root["i_max"] = rep.opts.i_max;
        root["seed"] = rep.opts.seed;
        root["trials"] = rep.opts.trials;
        root["checks"] = ojson::array();
        for (const CheckResult& c : rep.checks) {
            ojson jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["witness"] = c.pass ? ojson(nullptr) : ojson(c.witness);
            jc["info"] = c.info;
            root["checks"].push_back(std::move(jc));
        }
        root["all_pass"] = rep.all_pass();
        return root.dump(2) + "\n";
    }
    if (fmt == Format::csv) {
        out << "name,pass,witness\n";
        for (const CheckResult& c : rep.checks)
            out << c.name << ',' << (c.pass ? "true" : "false") << ",\""
                << (c.pass ? "" : c.witness) << "\"\n";
        return out.str();
    }
    out << "verify n=" << rep.opts.n << " i_max=" << rep.opts.i_max
        << " seed=" << rep.opts.seed << " trials=" << rep.opts.trials << '\n';
    for (const CheckResult& c : rep.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (c.pass && !c.info.empty())
            out << " (" << c.info << ")";
        if (!c.pass)
            out << ": " << c.witness;
        out << '\n';
    }
    out << "RESULT: " << (rep.all_pass() ? "PASS" : "FAIL") << " (" << rep.checks.size()
        << " checks)\n";
    return out.str();
}

} // namespace idlab
