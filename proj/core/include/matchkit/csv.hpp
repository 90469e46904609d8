#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace matchkit {

/// Shortest round-trip decimal form of a double (to_chars), deterministic
/// across runs.
std::string format_double(double v);

/// In-memory CSV builder: RFC-4180 quoting, `\n` line ends, one optional
/// leading `# ...` comment line carrying the experiment spec.
class CsvBuilder {
public:
    void comment(const std::string& text);
    void row(const std::vector<std::string>& fields);

    const std::string& str() const { return out_; }

private:
    std::string out_;
};

void write_text_file(const std::string& content, const std::string& path);

}  // namespace matchkit
