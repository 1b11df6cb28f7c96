from crlab.cli.service import main

if __name__ == "__main__":
    main()
