#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hbforge/io.hpp"

namespace hbforge {

// Provenance of a golden value: "literature" (a published value or display),
// "oracle" (an independent computation) or "elementary" (forced by hand).
struct Fact {
    std::string name;
    std::string expected;
    std::string computed;
    std::string provenance;
    bool pass = false;
};

enum class EntryStatus { pass, fail, error };
std::string status_name(EntryStatus s);

struct EntryReport {
    std::string id;
    std::string title;
    std::optional<std::uint64_t> seed;
    std::vector<Fact> facts;
    EntryStatus status = EntryStatus::pass;
    std::string error;

    std::string to_text() const;
    Json to_json() const;
};

class FactSink {
public:
    explicit FactSink(EntryReport& report) : report_(report) {}
    void check(const std::string& name, const std::string& expected, const std::string& computed,
               const std::string& provenance);
    void check(const std::string& name, bool expected, bool computed, const std::string& provenance);
    void check(const std::string& name, long long expected, long long computed, const std::string& provenance);
    void check(const std::string& name, int expected, int computed, const std::string& provenance) {
        check(name, static_cast<long long>(expected), static_cast<long long>(computed), provenance);
    }
    // A failed precondition of a pinned input; reported as ERROR.
    [[noreturn]] void registry_bug(const std::string& what);

private:
    EntryReport& report_;
};

struct RegistryEntry {
    std::string id;
    std::string title;
    std::optional<std::uint64_t> default_seed;
    std::function<void(FactSink&, std::uint64_t seed)> run;
};

const std::vector<RegistryEntry>& registry();
const RegistryEntry& registry_entry(const std::string& id);  // throws Error for unknown ids
EntryReport run_entry(const RegistryEntry& entry, std::optional<std::uint64_t> seed = std::nullopt);
EntryReport run_example(const std::string& id, std::optional<std::uint64_t> seed = std::nullopt);
// Runs every entry on a pool of `jobs` workers; reports come back in registry order.
std::vector<EntryReport> run_all(unsigned jobs, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace hbforge
