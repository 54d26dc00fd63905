#include "lsm/json_io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace lsm {
namespace {

using nlohmann::json;

json params_to_json(const Params& params) {
    json out = json::object();
    for (const auto& [key, value] : params) {
        std::visit([&](const auto& v) { out[key] = v; }, value);
    }
    return out;
}

Params params_from_json(const json& object) {
    Params params;
    for (const auto& [key, value] : object.items()) {
        if (value.is_boolean())
            params[key] = value.get<bool>();
        else if (value.is_number_integer())
            params[key] = value.get<std::int64_t>();
        else if (value.is_number_float())
            params[key] = value.get<double>();
        else if (value.is_string())
            params[key] = value.get<std::string>();
        else if (value.is_array())
            params[key] = value.get<std::vector<std::string>>();
        else
            throw std::runtime_error("unsupported params value for key '" + key + "'");
    }
    return params;
}

json optional_to_json(const std::optional<int>& value) {
    return value ? json(*value) : json(nullptr);
}

json optional_to_json(const std::optional<double>& value) {
    return value ? json(*value) : json(nullptr);
}

std::string percent(double fraction) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", fraction * 100.0);
    return buffer;
}

}  // namespace

std::string segmentation_to_json(const Segmentation& seg, const Params& params) {
    Params merged = params;
    merged["sentence_count"] = static_cast<std::int64_t>(seg.sentence_count);
    if (seg.degenerate) merged["degenerate"] = true;

    json out;
    out["doc_id"] = seg.doc_id;
    out["method"] = to_string(seg.method);
    out["link_level"] = optional_to_json(seg.link_level);
    out["boundaries"] = json::array();
    for (int b : seg.boundaries) out["boundaries"].push_back(b);
    out["params"] = params_to_json(merged);
    return out.dump(2) + "\n";
}

ParsedSegmentation segmentation_from_json(const std::string& text) {
    try {
        const json in = json::parse(text);
        ParsedSegmentation parsed;
        Segmentation& seg = parsed.segmentation;
        seg.doc_id = in.at("doc_id").get<std::string>();
        seg.method = method_from_string(in.at("method").get<std::string>());
        if (in.contains("link_level") && !in.at("link_level").is_null())
            seg.link_level = in.at("link_level").get<int>();
        for (const auto& b : in.at("boundaries")) seg.boundaries.insert(b.get<int>());
        if (in.contains("params")) parsed.params = params_from_json(in.at("params"));

        auto it = parsed.params.find("sentence_count");
        if (it == parsed.params.end() || !std::holds_alternative<std::int64_t>(it->second))
            throw std::runtime_error("missing params.sentence_count");
        seg.sentence_count = static_cast<int>(std::get<std::int64_t>(it->second));
        if (auto deg = parsed.params.find("degenerate");
            deg != parsed.params.end() && std::holds_alternative<bool>(deg->second))
            seg.degenerate = std::get<bool>(deg->second);

        validate(seg);
        return parsed;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("segmentation json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("segmentation json: ") + e.what());
    }
}

std::string eval_report_to_json(const EvalReport& report, const Params& params) {
    json out;
    out["doc_id"] = report.doc_id;
    out["method"] = to_string(report.method);
    out["link_level"] = optional_to_json(report.link_level);
    out["matches"] = json::array();
    for (int m : report.matches) out["matches"].push_back(m);
    out["recall"] = optional_to_json(report.recall);
    out["precision"] = optional_to_json(report.precision);
    out["inserted_count"] = report.inserted_count;
    out["reference_count"] = report.reference_count;
    out["window"] = report.window;
    out["params"] = params_to_json(params);
    return out.dump(2) + "\n";
}

EvalReport eval_report_from_json(const std::string& text) {
    try {
        const json in = json::parse(text);
        EvalReport report;
        report.doc_id = in.at("doc_id").get<std::string>();
        report.method = method_from_string(in.at("method").get<std::string>());
        if (!in.at("link_level").is_null()) report.link_level = in.at("link_level").get<int>();
        for (const auto& m : in.at("matches")) report.matches.insert(m.get<int>());
        if (!in.at("recall").is_null()) report.recall = in.at("recall").get<double>();
        if (!in.at("precision").is_null()) report.precision = in.at("precision").get<double>();
        report.inserted_count = in.at("inserted_count").get<int>();
        report.reference_count = in.at("reference_count").get<int>();
        report.window = in.at("window").get<int>();
        return report;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("eval report json: ") + e.what());
    }
}

std::string corpus_summary_to_json(const CorpusSummary& summary, const Params& params) {
    json out;
    out["levels"] = summary.levels;

    out["cells"] = json::array();
    for (const SummaryCell& cell : summary.cells) {
        json c;
        c["method"] = cell.method;
        c["genre"] = cell.genre;
        c["link_level"] = optional_to_json(cell.link_level);
        c["mean_recall"] = optional_to_json(cell.mean_recall);
        c["recall_stddev"] = optional_to_json(cell.recall_stddev);
        c["mean_precision"] = optional_to_json(cell.mean_precision);
        c["precision_stddev"] = optional_to_json(cell.precision_stddev);
        c["doc_count"] = cell.doc_count;
        out["cells"].push_back(std::move(c));
    }

    out["genre_means"] = json::array();
    for (const GenreMean& gm : summary.genre_means) {
        json g;
        g["method"] = gm.method;
        g["genre"] = gm.genre;
        g["mean_recall"] = optional_to_json(gm.mean_recall);
        g["mean_precision"] = optional_to_json(gm.mean_precision);
        out["genre_means"].push_back(std::move(g));
    }

    out["overall"] = json::array();
    for (const MethodOverall& mo : summary.overall) {
        json o;
        o["method"] = mo.method;
        o["mean_recall"] = optional_to_json(mo.mean_recall);
        o["mean_precision"] = optional_to_json(mo.mean_precision);
        out["overall"].push_back(std::move(o));
    }

    out["p_values"] = json::array();
    for (const SignificanceEntry& entry : summary.p_values) {
        json p;
        p["measure"] = entry.measure;
        p["method_a"] = entry.method_a;
        p["method_b"] = entry.method_b;
        p["link_level"] = optional_to_json(entry.link_level);
        p["p"] = entry.p;
        p["permutations"] = entry.permutations;
        p["seed"] = entry.seed;
        out["p_values"].push_back(std::move(p));
    }

    out["params"] = params_to_json(params);
    return out.dump(2) + "\n";
}

std::string corpus_summary_to_csv(const CorpusSummary& summary,
                                  const std::vector<std::string>& comments) {
    std::string out;
    for (const std::string& comment : comments) out += "# " + comment + "\n";
    out += "measure,method,genre,value\n";
    for (const char* measure : {"recall", "precision"}) {
        for (const GenreMean& gm : summary.genre_means) {
            const auto& value = std::string(measure) == "recall" ? gm.mean_recall : gm.mean_precision;
            if (!value) continue;
            out += measure;
            out += ',' + gm.method + ',' + gm.genre + ',' + percent(*value) + '\n';
        }
    }
    return out;
}

}  // namespace lsm
