// Exit-code contract of the CLI: 0 success, 1 fixture mismatch, 2 input
// error. Run with --cli <path-to-binary>.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;
std::string g_cli;

int exitCodeOf(const std::string& args) {
  const std::string command = "'" + g_cli + "' " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void expectExit(const std::string& args, int expected) {
  const int got = exitCodeOf(args);
  if (got == expected) {
    std::printf("ok   exit %d  musym %s\n", got, args.c_str());
  } else {
    std::printf("FAIL exit %d (want %d)  musym %s\n", got, expected,
                args.c_str());
    ++g_failures;
  }
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
  }
  if (g_cli.empty()) {
    std::printf("FAIL no --cli path\n");
    return 1;
  }

  const auto dir = std::filesystem::temp_directory_path();
  const auto intervals = dir / "musym_cli_ok.txt";
  const auto dissonant = dir / "musym_cli_dissonant.txt";
  const auto chords = dir / "musym_cli_chords.txt";
  const auto config = dir / "musym_cli_config.txt";
  const auto bad_config = dir / "musym_cli_bad_config.txt";
  std::ofstream(intervals) << "0+e.7\n0+e.4\n";
  std::ofstream(dissonant) << "0+e.7\n0+e.6\n";
  std::ofstream(chords) << "onset,pcs\n0,7|11|2\n";
  std::ofstream(config) << "default_format = json\n";
  std::ofstream(bad_config) << "default_format = tsv\n";

  expectExit("--help", 0);
  expectExit("cpt theorem", 0);
  expectExit("cpt analyze '" + intervals.string() + "'", 0);
  expectExit("cpt analyze '" + intervals.string() + "' --config '" +
                 config.string() + "'",
             0);
  expectExit("mod quantum --from C --to G --cadence k5", 0);
  expectExit("mod cadences --key Eb", 0);
  expectExit("nr apply --word P --triad deg:V@C", 0);
  expectExit("nr verify", 0);
  expectExit("fixtures run", 0);

  expectExit("", 2);                                        // missing verb
  expectExit("cpt analyze /nonexistent/file.txt", 2);       // unreadable
  expectExit("cpt analyze '" + dissonant.string() + "'", 2);
  expectExit("cpt analyze '" + chords.string() + "'", 2);   // wrong format
  expectExit("cpt successors 0+e.5", 2);                    // dissonant
  expectExit("cpt successors nonsense", 2);
  expectExit("mod quantum --from C --to D --cadence k9", 2);
  expectExit("mod quantum --from C --to D --cadence k4 --modulator 'e1*1'", 2);
  expectExit("mod quantum --from H --to D --cadence k4", 2);
  expectExit("nr apply --word Q --triad C", 2);
  expectExit("nr apply --word R --triad deg:VII@C", 2);     // diminished
  expectExit("cpt theorem --format tsv", 2);
  expectExit("cpt theorem --config '" + bad_config.string() + "'", 2);
  expectExit("cpt theorem --config /nonexistent/config", 2);

  for (const auto& path : {intervals, dissonant, chords, config, bad_config}) {
    std::filesystem::remove(path);
  }
  if (g_failures > 0) {
    std::printf("%d exit-code checks FAILED\n", g_failures);
    return 1;
  }
  std::printf("all exit-code checks passed\n");
  return 0;
}
