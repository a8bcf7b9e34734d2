#include "evidentia/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace evidentia {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw InvalidArgument("malformed JSON input");
    return j;
}

std::vector<std::string> string_array(const json& j, const char* what) {
    if (!j.is_array())
        throw InvalidArgument(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string())
            throw InvalidArgument(std::string(what) + " must be an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

Frame frame_field(const json& j, const char* field) {
    if (!j.is_object() || !j.contains(field))
        throw InvalidArgument(std::string("missing \"") + field + "\" field");
    return Frame(string_array(j[field], field));
}

FocalSet set_from_json(const Frame& frame, const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "*") return FocalSet::full_set(frame);
        throw InvalidArgument("\"set\" must be an array of labels or \"*\"");
    }
    return FocalSet::of(frame, string_array(j, "\"set\""));
}

double number_field(const json& j, const char* field) {
    if (!j.is_object() || !j.contains(field) || !j[field].is_number())
        throw InvalidArgument(std::string("missing numeric \"") + field + "\" field");
    return j[field].get<double>();
}

void write_labels(std::ostream& out, const std::vector<std::string>& labels) {
    out << '[';
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out << ", ";
        out << json(labels[i]).dump(); // proper string escaping
    }
    out << ']';
}

} // namespace

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    // Trim digits while the text still reparses to the same double.
    for (int digits = 1; digits < 17; ++digits) {
        char shorter[64];
        std::snprintf(shorter, sizeof shorter, "%.*g", digits, value);
        if (std::strtod(shorter, nullptr) == value) return shorter;
    }
    return buf;
}

BodyOfEvidence body_from_json(const std::string& text) {
    json j = parse(text);
    Frame frame = frame_field(j, "frame");
    if (!j.contains("masses") || !j["masses"].is_array())
        throw InvalidArgument("missing \"masses\" array");
    std::vector<BodyOfEvidence::Entry> entries;
    for (const auto& item : j["masses"]) {
        if (!item.is_object() || !item.contains("set"))
            throw InvalidArgument("each mass entry needs \"set\" and \"mass\"");
        entries.emplace_back(set_from_json(frame, item["set"]), number_field(item, "mass"));
    }
    return BodyOfEvidence(frame, entries);
}

std::string body_to_json(const BodyOfEvidence& body) {
    std::ostringstream out;
    out << "{\"frame\": ";
    write_labels(out, body.frame().labels());
    out << ", \"masses\": [";
    bool first = true;
    for (const auto& [set, mass] : body.entries()) {
        if (!first) out << ", ";
        first = false;
        out << "{\"set\": ";
        if (set.is_full())
            out << "\"*\"";
        else
            write_labels(out, set.members());
        out << ", \"mass\": " << format_number(mass) << '}';
    }
    out << "]}";
    return out.str();
}

PBox pbox_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("domain") || !j.contains("lower") || !j.contains("upper"))
        throw InvalidArgument("p-box needs \"domain\", \"lower\" and \"upper\"");
    auto domain = string_array(j["domain"], "\"domain\"");
    auto numbers = [](const json& arr, const char* what) {
        if (!arr.is_array())
            throw InvalidArgument(std::string(what) + " must be an array of numbers");
        std::vector<double> out;
        for (const auto& v : arr) {
            if (!v.is_number())
                throw InvalidArgument(std::string(what) + " must be an array of numbers");
            out.push_back(v.get<double>());
        }
        return out;
    };
    return PBox(domain, numbers(j["lower"], "\"lower\""), numbers(j["upper"], "\"upper\""));
}

std::string pbox_to_json(const PBox& pb) {
    std::ostringstream out;
    out << "{\"domain\": ";
    write_labels(out, pb.domain());
    auto cdf = [&out](const char* name, const std::vector<double>& values) {
        out << ", \"" << name << "\": [";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out << ", ";
            out << format_number(values[i]);
        }
        out << ']';
    };
    cdf("lower", pb.lower());
    cdf("upper", pb.upper());
    out << '}';
    return out.str();
}

Hypergraph hypergraph_from_json(const std::string& text) {
    json j = parse(text);
    Frame frame = frame_field(j, "frame");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw InvalidArgument("missing \"edges\" array");
    std::vector<FocalSet> edges;
    for (const auto& e : j["edges"])
        edges.push_back(FocalSet::of(frame, string_array(e, "edge")));
    return Hypergraph(frame, std::move(edges));
}

std::string intervals_to_json(const IntervalMassList& im) {
    std::ostringstream out;
    out << "{\"domain\": ";
    write_labels(out, im.domain());
    out << ", \"intervals\": [";
    bool first = true;
    for (const auto& [iv, p] : im.entries()) {
        if (!first) out << ", ";
        first = false;
        out << "{\"from\": " << json(im.domain()[iv.lo]).dump()
            << ", \"to\": " << json(im.domain()[iv.hi]).dump()
            << ", \"mass\": " << format_number(p) << '}';
    }
    out << "]}";
    return out.str();
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidArgument("cannot open \"" + path.string() + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

BodyOfEvidence load_body(const std::filesystem::path& path) {
    return body_from_json(read_file(path));
}

PBox load_pbox(const std::filesystem::path& path) {
    return pbox_from_json(read_file(path));
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
    return hypergraph_from_json(read_file(path));
}

} // namespace evidentia
