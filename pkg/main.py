from app.cmd.cmd import forge


def main():
    forge()


if __name__ == "__main__":
    main()
