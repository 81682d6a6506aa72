"""
The command line front end
==========================

The same computations are available as ``braidcocycles <subcommand>``; here
they are driven through ``main`` so the script runs without a shell.
"""

from braidcocycles.cli import main

main(["invariant", "--braid", "1 -2 -3", "--n", "4", "--family", "deg0:(2,1)-"])
main(["invariant", "--braid", "1 1 1 2 2 1 2 1", "--n", "3", "--family", "degd-l:1", "--format", "json"])
main(["trace", "--braid", "2 -1", "--n", "3"])
main(["distinguish", "--braid", "-1 2 -1 -1 -1 2 2 2", "--n", "3", "--l", "3"])
main(["cable", "--braid", "1 2 3 4", "--n", "5", "--k", "2"])

# errors are reported with distinct exit codes
print("exit code for a two-component closure:",
      main(["invariant", "--braid", "1 -1 2 -2", "--n", "3", "--family", "degd-l:1"]))
