from dehngoeritz.cli import main

raise SystemExit(main())
