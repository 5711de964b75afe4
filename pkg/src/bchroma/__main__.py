from bchroma.cli import main

raise SystemExit(main())
