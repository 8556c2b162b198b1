public class S020 extends Abstract1 {
    public void open() {
        new S038();
        new S049();
        log("trace");
    }

    public void close() {
        send("msg5");
        send("msg1");
    }

    public void start() {
        send("msg3");
        if (counter > 0) {
            send("msg3");
        } else {
            send("msg7");
            new Abstract17();
            new S063();
        }
    }

    public void stop() {
        if (counter > 2) {
            switch (event) {
                case EV4:
                    log("trace");
                    break;
                case EV0:
                    try {
                        new S007();
                    } finally {
                        new S063();
                    }
                    log("trace");
                    new Abstract21();
                    break;
                case EV2:
                    new Abstract23();
                    log("trace");
                    if (counter > 9) {
                        new S097();
                        new S025();
                    } else {
                        update();
                    }
                    break;
            }
            new S033();
            new S071();
        }
    }

    public void tick() {
        if (counter > 9) {
            if (counter > 3) {
                switch (event) {
                    case EV4:
                        new S075();
                        log("trace");
                        send("msg7");
                        break;
                    case EV3:
                        update();
                        new S009();
                        break;
                    case EV1:
                        new S001();
                        new S071();
                        send("msg5");
                        break;
                }
            } else {
                send("msg4");
                new S059();
                new S014();
            }
        }
        switch (event) {
            case EV4:
                update();
                new Abstract3();
                new S025();
                break;
            case EV1:
                new S025();
                send("msg3");
                send("msg1");
                break;
            case EV3:
                if (counter > 4) {
                    if (counter > 0) {
                        new S090();
                    } else {
                        send("msg5");
                        log("trace");
                    }
                    send("msg2");
                    send("msg0");
                } else {
                    new S049();
                }
                send("msg5");
                break;
        }
    }

    public void reset() {
        try {
            send("msg3");
            switch (event) {
                case EV5:
                    try {
                        send("msg3");
                    } catch (TimeoutException e) {
                        new S045();
                        new S076();
                    } finally {
                        send("msg3");
                        new S032();
                    }
                    break;
                case EV3:
                    try {
                        new S054();
                    } catch (TimeoutException e) {
                        send("msg7");
                        send("msg0");
                        send("msg5");
                    } catch (IllegalStateException e) {
                        send("msg0");
                    }
                    break;
            }
            new S071();
        } catch (IllegalStateException e) {
            new S042();
        }
        send("msg5");
    }

    public void pause() {
        switch (event) {
            case EV3:
                send("msg3");
                break;
        }
    }

    public void resume() {
        new S038();
        if (counter > 8) {
            new S055();
            send("msg7");
        } else {
            new Abstract22();
            if (counter > 8) {
                send("msg2");
                switch (event) {
                    case EV3:
                        new S074();
                        new S008();
                        break;
                }
            }
        }
        try {
            send("msg7");
            switch (event) {
                case EV5:
                    new S061();
                    try {
                        new S038();
                        new S066();
                        new S078();
                    } catch (IOException e) {
                        log("trace");
                    }
                    break;
                case EV4:
                    send("msg1");
                    send("msg1");
                    new S010();
                    break;
                case EV3:
                    new S030();
                    try {
                        new S055();
                    } catch (IOException e) {
                        new S018();
                        new Helper();
                        new S074();
                    }
                    break;
            }
        } catch (IllegalStateException e) {
            log("trace");
            new S030();
            update();
        }
    }

    public void load() {
        switch (event) {
            case EV0:
                if (counter > 2) {
                    try {
                        send("msg0");
                    } finally {
                        log("trace");
                        send("msg4");
                    }
                } else {
                    update();
                    send("msg0");
                    if (counter > 4) {
                        log("trace");
                    }
                }
                if (counter > 2) {
                    switch (event) {
                        case EV1:
                            send("msg3");
                            break;
                        case EV4:
                            new Abstract3();
                            send("msg4");
                            new S088();
                            break;
                        case EV5:
                            send("msg7");
                            update();
                            break;
                    }
                }
                update();
                break;
        }
    }

    public void save() {
        new S059();
        send("msg2");
    }
}
