#include "matchkit/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace matchkit {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc()) throw std::runtime_error("format_double failed");
    return std::string(buf, res.ptr);
}

namespace {

bool needs_quotes(const std::string& f) {
    return f.find_first_of(",\"\n\r") != std::string::npos;
}

std::string quoted(const std::string& f) {
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void CsvBuilder::comment(const std::string& text) {
    out_ += "# ";
    out_ += text;
    out_ += '\n';
}

void CsvBuilder::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ += ',';
        out_ += needs_quotes(fields[i]) ? quoted(fields[i]) : fields[i];
    }
    out_ += '\n';
}

void write_text_file(const std::string& content, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace matchkit
