// Behavioral checks of the command-line surface: exit codes, diagnostics
// naming the offending token, and byte-stable JSON output. argv[1] is the
// path to the binary.

#include <iostream>
#include <string>

#include "cli_util.hpp"

using testing_helpers::run_cli;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cout << "FAIL: " << what << "\n";
        ++failures;
    }
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "./tools/trifold";

    auto act = run_cli(cli + " act --k 3 --word \"s1\"");
    expect(act.exit_code == 0, "act exits 0");
    expect(contains(act.output, "x1 -> x1 y1"), "act reports x1 -> x1 y1");
    expect(contains(act.output, "y1 -> x1^-1"), "act reports y1 -> x1^-1");
    expect(contains(act.output, "a1 -> b1^-1"), "act reports a1 -> b1^-1");

    auto bad_word = run_cli(cli + " act --k 3 --word \"s1 t9\"", /*merge_stderr=*/true);
    expect(bad_word.exit_code == 2, "malformed braid word exits 2");
    expect(contains(bad_word.output, "t9"), "diagnostic names the offending token");

    auto out_of_range = run_cli(cli + " act --k 3 --word \"s7\"", true);
    expect(out_of_range.exit_code == 2, "out-of-range generator exits 2");
    expect(contains(out_of_range.output, "s7"), "diagnostic names the generator");

    auto no_relations = run_cli(cli + " verify-braid --k 2");
    expect(no_relations.exit_code == 0, "verify-braid --k 2 exits 0 (nothing to check)");

    auto small_tables = run_cli(cli + " verify-pi1-tables --k 2", true);
    expect(small_tables.exit_code == 2, "verify-pi1-tables --k 2 exits 2");

    auto missing = run_cli(cli + " topology", true);
    expect(missing.exit_code == 2, "topology without --k or --monodromy exits 2");

    auto conflict = run_cli(cli + " topology --k 3 --monodromy \"(0 1)\"", true);
    expect(conflict.exit_code == 2, "--k and --monodromy together exit 2");

    auto bad_cycles = run_cli(cli + " topology --sheets 3 --monodromy \"(0 5)\"", true);
    expect(bad_cycles.exit_code == 2, "out-of-range sheet exits 2");
    expect(contains(bad_cycles.output, "5"), "diagnostic names the sheet index");

    auto unknown = run_cli(cli + " frobnicate", true);
    expect(unknown.exit_code == 2, "unknown subcommand exits 2");

    auto first = run_cli(cli + " verify-decomposition --k 4 --format json");
    auto second = run_cli(cli + " verify-decomposition --k 4 --format json");
    expect(first.exit_code == 0 && second.exit_code == 0, "verify-decomposition exits 0");
    expect(first.output == second.output, "JSON output is byte-identical across runs");
    expect(!first.output.empty(), "JSON output is nonempty");

    auto disconnected = run_cli(cli + " topology --sheets 3 --monodromy \"(0 1)\" --format json");
    expect(disconnected.exit_code == 0, "disconnected cover still reports invariants");
    expect(contains(disconnected.output, "\"connected\":false"), "reports connected=false");

    auto act_json = run_cli(cli + " act --k 2 --word \"s1\" --format json");
    expect(act_json.exit_code == 0, "act --format json exits 0");
    expect(contains(act_json.output, "\"type\":\"presentation\""), "act json includes the presentation");
    expect(contains(act_json.output, "\"objects\""), "presentation record lists objects");
    expect(contains(act_json.output, "\"name\":\"a1\",\"image\":\"b1^-1\""), "act json arrow image");

    if (failures) {
        std::cout << failures << " CLI checks FAILED\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
