try:
    from dotenv import load_dotenv

    load_dotenv()
except ModuleNotFoundError:
    # `python-dotenv` в dev-зависимостях.
    pass
