#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace convchain {

/// Minimal streaming JSON writer with deterministic formatting: keys emitted
/// in call order, floats as %.15g, non-finite floats as null. Keeps output
/// byte-stable across runs, which the machine-readable surface promises.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);
    JsonWriter& value(std::string_view text);
    JsonWriter& value(const char* text);
    JsonWriter& value(bool b);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(double v);
    JsonWriter& null();

    const std::string& str() const { return out_; }

private:
    void before_item();
    void append_escaped(std::string_view text);

    std::string out_;
    // one flag per open container: true once it has at least one item
    std::vector<bool> has_item_;
    bool after_key_ = false;
};

}  // namespace convchain
