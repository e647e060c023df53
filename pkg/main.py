import sys

from dotenv import load_dotenv

# Load .env before anything reads NICHOLS_* settings
load_dotenv()

from app.cli.api.route import run  # noqa: E402

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
