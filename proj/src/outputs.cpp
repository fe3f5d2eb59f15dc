#include "tda/outputs.hpp"

#include "tda/errors.hpp"
#include "tda/hash.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tda {

using nlohmann::json;

namespace {

std::string fmt(double v, const char* spec = "%.9g") {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot open for writing: " + path.string());
    out << content;
    if (!out)
        throw DataError("write failed: " + path.string());
}

} // namespace

std::string diagram_to_json(const PersistenceDiagram& d) {
    json pairs = json::array();
    for (const PersistencePair& pr : d.pairs) {
        json pair = json::array();
        pair.push_back(pr.birth);
        if (std::isfinite(pr.death))
            pair.push_back(pr.death);
        else
            pair.push_back(nullptr);
        pairs.push_back(std::move(pair));
    }
    json j;
    j["dim"] = d.dim;
    j["pairs"] = std::move(pairs);
    return j.dump();
}

PersistenceDiagram diagram_from_json(const std::string& text) {
    const json j = json::parse(text);
    PersistenceDiagram d;
    d.dim = j.at("dim");
    for (const json& pair : j.at("pairs")) {
        PersistencePair pr;
        pr.dim = d.dim;
        pr.birth = pair.at(0);
        pr.death = pair.at(1).is_null() ? kInfiniteDeath : pair.at(1).get<double>();
        d.pairs.push_back(pr);
    }
    return d;
}

std::string norms_to_csv(const std::vector<NormRecord>& records) {
    std::ostringstream out;
    out << "date,norm,feature_count,max_persistence\n";
    for (const NormRecord& r : records)
        out << format_date(r.date) << ',' << fmt(r.norm) << ',' << r.feature_count << ','
            << fmt(r.max_persistence) << '\n';
    return out.str();
}

std::vector<NormRecord> norms_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "date,norm,feature_count,max_persistence")
        throw DataError("bad norms CSV header");
    std::vector<NormRecord> records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        NormRecord r;
        char date[16];
        if (std::sscanf(line.c_str(), "%15[^,],%lf,%d,%lf", date, &r.norm, &r.feature_count,
                        &r.max_persistence) != 4)
            throw DataError("norms CSV line " + std::to_string(lineno) + ": malformed row");
        r.date = parse_instant(date);
        records.push_back(r);
    }
    return records;
}

std::string norms_to_svg(const std::vector<NormRecord>& records) {
    constexpr int width = 900, height = 300;
    constexpr int ml = 60, mr = 20, mt = 20, mb = 40; // margins

    double max_norm = 0.0;
    for (const NormRecord& r : records)
        max_norm = std::max(max_norm, r.norm);
    if (max_norm == 0.0)
        max_norm = 1.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";

    const double px = static_cast<double>(width - ml - mr);
    const double py = static_cast<double>(height - mt - mb);
    const std::size_t n = records.size();

    // y ticks at 0, max/2, max
    for (int k = 0; k <= 2; ++k) {
        const double v = max_norm * k / 2.0;
        const double y = height - mb - py * v / max_norm;
        svg << "<line x1=\"" << ml - 4 << "\" y1=\"" << fmt(y, "%.2f") << "\" x2=\"" << ml
            << "\" y2=\"" << fmt(y, "%.2f") << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << ml - 8 << "\" y=\"" << fmt(y + 4, "%.2f")
            << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(v, "%.4g") << "</text>\n";
    }
    // x ticks at first, middle, last date
    if (n > 0) {
        const std::size_t ticks[] = {0, n / 2, n - 1};
        for (std::size_t i : ticks) {
            const double x = n > 1 ? ml + px * static_cast<double>(i) / (n - 1) : ml + px / 2;
            svg << "<line x1=\"" << fmt(x, "%.2f") << "\" y1=\"" << height - mb << "\" x2=\""
                << fmt(x, "%.2f") << "\" y2=\"" << height - mb + 4 << "\" stroke=\"black\"/>\n";
            svg << "<text x=\"" << fmt(x, "%.2f") << "\" y=\"" << height - mb + 18
                << "\" font-size=\"11\" text-anchor=\"middle\">" << format_date(records[i].date)
                << "</text>\n";
        }
    }
    svg << "<text x=\"16\" y=\"" << mt + py / 2
        << "\" font-size=\"12\" transform=\"rotate(-90 16 " << mt + py / 2
        << ")\" text-anchor=\"middle\">norm</text>\n";
    svg << "<text x=\"" << ml + px / 2 << "\" y=\"" << height - 6
        << "\" font-size=\"12\" text-anchor=\"middle\">date</text>\n";

    if (n > 0) {
        svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            const double x = n > 1 ? ml + px * static_cast<double>(i) / (n - 1) : ml + px / 2;
            const double y = height - mb - py * records[i].norm / max_norm;
            if (i)
                svg << ' ';
            svg << fmt(x, "%.2f") << ',' << fmt(y, "%.2f");
        }
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

Manifest emit_outputs(const AnalysisResult& result, const PipelineConfig& cfg,
                      const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir / "diagrams", ec);
    if (ec)
        throw DataError("cannot create output directory " + dir.string() + ": " + ec.message());

    Manifest manifest;
    const auto emit = [&](const std::string& rel, const std::string& content) {
        write_file(dir / rel, content);
        manifest.entries.push_back({rel, sha256_hex(content)});
    };

    emit("norms.csv", norms_to_csv(result.records));

    std::ostringstream skipped;
    skipped << "window_index,date,reason\n";
    for (const SkippedWindow& s : result.skipped)
        skipped << s.window_index << ',' << format_date(s.date) << ',' << s.reason << '\n';
    emit("skipped.csv", skipped.str());

    json cfg_json = json::parse(cfg.to_json());
    cfg_json["fingerprint"] = result.fingerprint;
    emit("config.json", cfg_json.dump(2) + "\n");

    for (const WindowDiagram& wd : result.diagrams)
        emit("diagrams/" + format_date(wd.date) + ".json", diagram_to_json(wd.diagram) + "\n");

    emit("norms.svg", norms_to_svg(result.records));

    std::sort(manifest.entries.begin(), manifest.entries.end(),
              [](const ManifestEntry& a, const ManifestEntry& b) { return a.path < b.path; });
    json mj = json::array();
    for (const ManifestEntry& e : manifest.entries)
        mj.push_back({{"path", e.path}, {"sha256", e.sha256}});
    write_file(dir / "manifest.json", mj.dump(2) + "\n");
    return manifest;
}

} // namespace tda
