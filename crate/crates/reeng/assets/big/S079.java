public class S079 extends State {
    public void open() {
        update();
    }

    public void close() {
        send("msg5");
        send("msg1");
        send("msg5");
    }

    public void start() {
        new S060();
        if (counter > 7) {
            if (counter > 0) {
                new S026();
                send("msg5");
            }
            send("msg0");
            if (counter > 1) {
                new S055();
                try {
                    new Abstract6();
                } finally {
                    new S019();
                }
            }
        }
    }

    public void stop() {
        send("msg2");
    }

    public void tick() {
        new S075();
        if (counter > 8) {
            send("msg2");
            log("trace");
            new S067();
        }
        send("msg6");
    }

    public void reset() {
        if (counter > 7) {
            if (counter > 9) {
                try {
                    new S085();
                } finally {
                    send("msg4");
                    new S016();
                }
                new S040();
                if (counter > 9) {
                    send("msg6");
                    new S056();
                    send("msg7");
                } else {
                    send("msg7");
                }
            }
        }
        new S068();
        new S012();
    }

    public void pause() {
        if (counter > 1) {
            new S058();
        }
        try {
            new S086();
            new S044();
        } finally {
            switch (event) {
                case EV4:
                    log("trace");
                    break;
                case EV3:
                    send("msg6");
                    update();
                    break;
            }
            switch (event) {
                case EV3:
                    send("msg3");
                    send("msg4");
                    try {
                        new S092();
                    } finally {
                        new Abstract21();
                        send("msg4");
                    }
                    break;
                case EV2:
                    if (counter > 4) {
                        new S083();
                        send("msg5");
                    }
                    send("msg2");
                    break;
            }
            try {
                try {
                    new S081();
                    send("msg3");
                    send("msg7");
                } finally {
                    log("trace");
                    new S081();
                }
                update();
            } catch (IllegalStateException e) {
                send("msg3");
                update();
            } finally {
                switch (event) {
                    case EV1:
                        send("msg0");
                        log("trace");
                        send("msg6");
                        break;
                }
            }
        }
    }

    public void resume() {
        try {
            switch (event) {
                case EV5:
                    send("msg4");
                    send("msg0");
                    if (counter > 6) {
                        send("msg1");
                    }
                    break;
                case EV1:
                    send("msg3");
                    log("trace");
                    break;
                case EV0:
                    send("msg7");
                    switch (event) {
                        case EV0:
                            log("trace");
                            send("msg6");
                            send("msg2");
                            break;
                        case EV4:
                            new S018();
                            break;
                    }
                    new S001();
                    break;
            }
            new S066();
            send("msg3");
        } catch (TimeoutException e) {
            send("msg0");
            try {
                if (counter > 0) {
                    new Abstract15();
                    send("msg5");
                    send("msg6");
                }
            } catch (IOException e) {
                new S029();
            } catch (TimeoutException e) {
                switch (event) {
                    case EV4:
                        send("msg4");
                        new S070();
                        log("trace");
                        break;
                    case EV0:
                        send("msg3");
                        new S008();
                        new Abstract21();
                        break;
                    case EV2:
                        new S066();
                        break;
                }
                new S056();
                update();
            }
        } catch (IOException e) {
            new S073();
            log("trace");
        }
        new S015();
        switch (event) {
            case EV3:
                new S084();
                switch (event) {
                    case EV3:
                        send("msg5");
                        log("trace");
                        if (counter > 3) {
                            send("msg1");
                            update();
                            new S038();
                        }
                        break;
                    case EV1:
                        log("trace");
                        break;
                    case EV2:
                        try {
                            new S041();
                            log("trace");
                            new S023();
                        } catch (TimeoutException e) {
                            log("trace");
                            new S053();
                        } catch (IllegalStateException e) {
                            send("msg6");
                            update();
                        }
                        try {
                            update();
                        } finally {
                            log("trace");
                            log("trace");
                        }
                        break;
                }
                send("msg3");
                break;
            case EV0:
                switch (event) {
                    case EV1:
                        switch (event) {
                            case EV0:
                                new S032();
                                new Helper();
                                new S059();
                                break;
                            case EV5:
                                new S053();
                                log("trace");
                                break;
                        }
                        break;
                }
                new S064();
                break;
            case EV4:
                new Abstract16();
                send("msg6");
                send("msg6");
                break;
        }
    }

    public void load() {
        new S014();
        send("msg4");
    }

    public void save() {
        send("msg5");
        new S012();
    }
}
