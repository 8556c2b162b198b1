public class S012 extends State {
    public void open() {
        switch (event) {
            case EV5:
                try {
                    if (counter > 6) {
                        new S015();
                    }
                } finally {
                    send("msg2");
                    if (counter > 9) {
                        new S085();
                        new S088();
                        log("trace");
                    } else {
                        new S068();
                        new S018();
                        send("msg5");
                    }
                    switch (event) {
                        case EV1:
                            new S027();
                            break;
                        case EV2:
                            new S090();
                            new S010();
                            send("msg2");
                            break;
                    }
                }
                if (counter > 0) {
                    send("msg6");
                    new S003();
                    send("msg7");
                } else {
                    switch (event) {
                        case EV3:
                            update();
                            send("msg7");
                            break;
                        case EV1:
                            send("msg1");
                            new S051();
                            break;
                        case EV5:
                            new S058();
                            break;
                    }
                    new S071();
                    try {
                        send("msg7");
                    } catch (IllegalStateException e) {
                        update();
                    } catch (TimeoutException e) {
                        new S077();
                    }
                }
                break;
            case EV3:
                new S012();
                if (counter > 7) {
                    log("trace");
                }
                break;
            default:
                send("msg2");
                update();
                break;
        }
        send("msg6");
        new S079();
    }

    public void close() {
        send("msg5");
        new Abstract14();
    }

    public void start() {
        log("trace");
        new S097();
        new S095();
    }

    public void stop() {
        send("msg1");
        log("trace");
        switch (event) {
            case EV5:
                send("msg6");
                if (counter > 5) {
                    new S007();
                    try {
                        send("msg5");
                        new S027();
                        new Abstract11();
                    } catch (IllegalStateException e) {
                        new S023();
                    }
                }
                try {
                    if (counter > 9) {
                        new S099();
                    } else {
                        send("msg3");
                        new S081();
                    }
                } catch (IllegalStateException e) {
                    send("msg3");
                }
                break;
            case EV2:
                switch (event) {
                    case EV2:
                        log("trace");
                        try {
                            new S060();
                            new S092();
                            new S066();
                        } catch (TimeoutException e) {
                            send("msg2");
                        }
                        new S064();
                        break;
                    case EV4:
                        switch (event) {
                            case EV1:
                                new S051();
                                new S020();
                                break;
                        }
                        send("msg4");
                        try {
                            new S010();
                        } catch (TimeoutException e) {
                            new S045();
                            new S075();
                        } catch (IllegalStateException e) {
                            send("msg5");
                            send("msg5");
                            send("msg3");
                        } finally {
                            update();
                            send("msg1");
                        }
                        break;
                }
                send("msg2");
                break;
            case EV0:
                new S056();
                new S028();
                new S057();
                break;
        }
    }

    public void tick() {
        new S036();
        send("msg7");
        switch (event) {
            case EV1:
                new Abstract11();
                break;
            case EV2:
                send("msg2");
                new S073();
                break;
            case EV4:
                switch (event) {
                    case EV2:
                        switch (event) {
                            case EV1:
                                new S060();
                                send("msg0");
                                break;
                            case EV2:
                                update();
                                break;
                        }
                        send("msg1");
                        break;
                    case EV5:
                        try {
                            send("msg3");
                        } catch (TimeoutException e) {
                            new S005();
                        }
                        send("msg2");
                        break;
                    case EV0:
                        send("msg6");
                        if (counter > 3) {
                            send("msg7");
                            send("msg1");
                        }
                        break;
                    default:
                        new Abstract20();
                        new S099();
                        break;
                }
                new S097();
                break;
        }
    }

    public void reset() {
        try {
            send("msg3");
            try {
                send("msg4");
                try {
                    send("msg2");
                    log("trace");
                } finally {
                    new S084();
                    send("msg6");
                }
                new S004();
            } finally {
                new S020();
            }
            send("msg6");
        } finally {
            switch (event) {
                case EV5:
                    send("msg1");
                    if (counter > 8) {
                        new S040();
                        send("msg2");
                    } else {
                        new S075();
                    }
                    try {
                        send("msg0");
                        new S083();
                        send("msg5");
                    } finally {
                        send("msg6");
                    }
                    break;
            }
        }
        new S036();
    }

    public void pause() {
        new S007();
        update();
        if (counter > 4) {
            update();
            try {
                switch (event) {
                    case EV1:
                        log("trace");
                        log("trace");
                        break;
                    case EV2:
                        new S063();
                        new S084();
                        send("msg2");
                        break;
                }
                try {
                    send("msg2");
                } finally {
                    new S081();
                    new S014();
                }
                send("msg3");
            } finally {
                switch (event) {
                    case EV3:
                        new S037();
                        send("msg4");
                        break;
                    case EV2:
                        send("msg6");
                        send("msg2");
                        send("msg3");
                        break;
                }
            }
        } else {
            send("msg7");
            log("trace");
        }
    }

    public void resume() {
        update();
        send("msg4");
    }

    public void load() {
        try {
            try {
                new S063();
            } finally {
                send("msg5");
                log("trace");
            }
        } finally {
            switch (event) {
                case EV1:
                    if (counter > 5) {
                        send("msg6");
                        new S068();
                    }
                    break;
                case EV2:
                    send("msg4");
                    send("msg1");
                    new S064();
                    break;
            }
            update();
            new S066();
        }
        if (counter > 3) {
            new S072();
            new S028();
        } else {
            send("msg1");
        }
    }

    public void save() {
        new Abstract13();
        new S078();
    }
}
