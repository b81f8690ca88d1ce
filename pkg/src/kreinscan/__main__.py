from kreinscan.cli import main

raise SystemExit(main())
