#include "lsm/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lsm {
namespace {

bool starts_with(const std::string& line, const char* prefix) {
    return line.rfind(prefix, 0) == 0;
}

}  // namespace

Document parse_document(std::istream& source, const std::string& id, const NormalizationConfig& config) {
    Document doc;
    doc.id = id;

    std::string line;
    int line_number = 0;
    int pending_heading_line = 0;  // line of the most recent unattached heading
    bool heading_pending = false;

    while (std::getline(source, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (starts_with(line, "## ")) {
            heading_pending = true;
            pending_heading_line = line_number;
            continue;
        }
        if (starts_with(line, "# ")) continue;

        Sentence sentence;
        sentence.index = static_cast<int>(doc.sentences.size()) + 1;
        sentence.raw = line;
        sentence.tokens = tokenize(line, config);
        doc.sentences.push_back(std::move(sentence));
        if (heading_pending) {
            doc.heading_positions.insert(doc.sentences.back().index);
            heading_pending = false;
        }
    }
    if (source.bad()) throw ParseError(id, line_number, "read failure");
    if (heading_pending)
        throw ParseError(id, pending_heading_line, "section heading has no following sentence");

    validate(doc);
    return doc;
}

Document parse_document(const std::string& text, const std::string& id, const NormalizationConfig& config) {
    std::istringstream stream(text);
    return parse_document(stream, id, config);
}

std::string serialize_document(const Document& doc) {
    std::string out;
    for (const Sentence& sentence : doc.sentences) {
        if (doc.heading_positions.contains(sentence.index)) out += "## section\n";
        out += sentence.raw;
        out += '\n';
    }
    return out;
}

std::vector<Document> load_corpus(const std::filesystem::path& dir, const NormalizationConfig& config) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw std::runtime_error("corpus path is not a directory: " + dir.string());

    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().filename().string().starts_with(".")) continue;
        files.push_back(entry.path());
    }
    if (files.empty()) throw std::runtime_error("corpus directory is empty: " + dir.string());

    std::vector<Document> docs;
    docs.reserve(files.size());
    for (const auto& path : files) {
        fs::path rel = fs::relative(path, dir);
        fs::path id_path = rel.parent_path() / rel.stem();
        std::string id = id_path.generic_string();
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open corpus file: " + path.string());
        docs.push_back(parse_document(in, id, config));
    }
    std::sort(docs.begin(), docs.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    return docs;
}

}  // namespace lsm
