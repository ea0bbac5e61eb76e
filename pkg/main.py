from src.cli.controllers import app

if __name__ == "__main__":
    app()
